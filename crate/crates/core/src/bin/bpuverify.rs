fn main() {
    std::process::exit(bpuverify::cli::main_with_args(std::env::args_os()));
}
