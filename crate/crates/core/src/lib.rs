pub mod cli;
pub mod dga;
pub mod intlinalg;
pub mod mod2alg;
pub mod poly;
pub mod report;
pub mod series;
pub mod ssverify;
pub mod symfun;
