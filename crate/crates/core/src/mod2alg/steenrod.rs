use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::poly::{Monomial, Polynomial};

use super::{Mod2Error, PresentedAlgebra};

/// `C(n, k) mod 2` by Lucas' theorem; zero when `k > n` or either is negative.
pub fn binomial_mod2(n: i64, k: i64) -> bool {
    n >= 0 && k >= 0 && k <= n && (k & !n) == 0
}

/// How squares of generators are determined.
#[derive(Debug, Clone)]
pub enum SquareRule {
    /// Generators are Stiefel–Whitney classes: the generator of degree `k` is
    /// `w_k`; missing degrees (such as `w_1`) are zero. Squares follow the Wu formula.
    StiefelWhitney,
    /// Generators are mod-2 Chern classes: the generator of degree `2k` is `c_k`.
    Chern,
    /// Explicit `Sq^i(g)` values keyed by `(generator index, i)`. Values for
    /// non-powers of two are derived with Adem relations; missing powers of
    /// two below the degree are reported as underdetermined.
    Table(BTreeMap<(usize, u32), Polynomial>),
}

/// Total Steenrod squares on a presented algebra, extended by the Cartan formula.
pub struct SteenrodAction {
    algebra: Arc<PresentedAlgebra>,
    rule: SquareRule,
    classes: Vec<Option<usize>>,
    cache: Mutex<HashMap<(usize, u32), Polynomial>>,
}

impl std::fmt::Debug for SteenrodAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SteenrodAction")
            .field("algebra", &self.algebra.name())
            .field("rule", &self.rule)
            .finish()
    }
}

impl SteenrodAction {
    pub fn new(algebra: Arc<PresentedAlgebra>, rule: SquareRule) -> Self {
        let weights = algebra.ring().vars().weights();
        let step = if matches!(rule, SquareRule::Chern) { 2 } else { 1 };
        let top = weights.iter().copied().max().unwrap_or(0) / step;
        let mut classes = vec![None; top as usize + 1];
        for (i, &w) in weights.iter().enumerate() {
            if w % step == 0 {
                classes[(w / step) as usize] = Some(i);
            }
        }
        SteenrodAction {
            algebra,
            rule,
            classes,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// Build a table rule from `(generator, i, value)` strings.
    pub fn from_table(algebra: Arc<PresentedAlgebra>, entries: &[(&str, u32, &str)]) -> Result<Self, Mod2Error> {
        let mut table = BTreeMap::new();
        for (g, i, v) in entries {
            let gi = algebra.index_of(g)?;
            table.insert((gi, *i), algebra.parse(v)?);
        }
        Ok(Self::new(algebra, SquareRule::Table(table)))
    }

    pub fn algebra(&self) -> &Arc<PresentedAlgebra> {
        &self.algebra
    }

    pub fn rule(&self) -> &SquareRule {
        &self.rule
    }

    /// `w_k` or `c_k` as an element: 1 for `k = 0`, zero when absent.
    fn class(&self, k: i64) -> Polynomial {
        let ring = self.algebra.ring();
        if k == 0 {
            return ring.one();
        }
        match self.classes.get(k as usize).copied().flatten() {
            Some(i) => ring.var(i).expect("index in range"),
            None => ring.zero(),
        }
    }

    fn characteristic_class_square(&self, k: i64, t: i64) -> Polynomial {
        // Sq^t(x_k) = Σ_j C(k−j−1, t−j) x_{k+t−j} x_j for 0 < t < k
        let mut out = self.algebra.ring().zero();
        for j in 0..=t {
            if binomial_mod2(k - j - 1, t - j) {
                out = &out + &(&self.class(k + t - j) * &self.class(j));
            }
        }
        out
    }

    /// `Sq^i` of generator `g` (by index), in normal form.
    pub fn sq_generator(&self, g: usize, i: u32) -> Result<Polynomial, Mod2Error> {
        let ring = self.algebra.ring();
        let x = ring.var(g)?;
        let deg = ring.vars().weights()[g];
        if i == 0 {
            return Ok(x);
        }
        if i > deg {
            return Ok(ring.zero());
        }
        if i == deg {
            return Ok(self.algebra.normal_form(&(&x * &x)));
        }
        if let Some(v) = self.cache.lock().expect("cache lock").get(&(g, i)) {
            return Ok(v.clone());
        }
        let value = match &self.rule {
            SquareRule::StiefelWhitney => self.characteristic_class_square(deg as i64, i as i64),
            SquareRule::Chern => {
                if i % 2 == 1 {
                    ring.zero()
                } else {
                    self.characteristic_class_square(deg as i64 / 2, i as i64 / 2)
                }
            }
            SquareRule::Table(t) => match t.get(&(g, i)) {
                Some(v) => v.clone(),
                None if i.is_power_of_two() => {
                    return Err(Mod2Error::Underdetermined {
                        generator: ring.vars().names()[g].clone(),
                        i,
                    })
                }
                None => self.adem_decomposed(&x, i)?,
            },
        };
        let value = self.algebra.normal_form(&value);
        self.cache.lock().expect("cache lock").insert((g, i), value.clone());
        Ok(value)
    }

    /// `Sq^i = Sq^r Sq^{2^k} + Σ_{c≥1} C(2^k−c−1, r−2c) Sq^{i−c} Sq^c`
    /// with `2^k` the largest power of two below `i` and `r = i − 2^k`.
    fn adem_decomposed(&self, x: &Polynomial, i: u32) -> Result<Polynomial, Mod2Error> {
        let a = 1u32 << (31 - i.leading_zeros());
        let r = i - a;
        let mut out = self.sq(r, &self.sq(a, x)?)?;
        for c in 1..=r / 2 {
            if binomial_mod2(a as i64 - c as i64 - 1, r as i64 - 2 * c as i64) {
                out = &out + &self.sq(i - c, &self.sq(c, x)?)?;
            }
        }
        Ok(out)
    }

    /// Excess-graded pieces `[Sq^0 x, …, Sq^max x]` of the total square of `x^(2^s)`.
    fn total_square_of_power(&self, g: usize, s: u32, max: u32) -> Result<Vec<Polynomial>, Mod2Error> {
        let ring = self.algebra.ring();
        let step = 1u32 << s;
        let mut out = vec![ring.zero(); max as usize + 1];
        let mut t = 0u32;
        while t * step <= max {
            let piece = self.sq_generator(g, t)?;
            let mut p = piece;
            for _ in 0..s {
                p = self.algebra.normal_form(&(&p * &p));
            }
            out[(t * step) as usize] = p;
            t += 1;
        }
        Ok(out)
    }

    fn truncated_product(&self, a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
        let ring = self.algebra.ring();
        let mut out = vec![ring.zero(); a.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(a.len() - i) {
                if !y.is_zero() {
                    out[i + j] = &out[i + j] + &(x * y);
                }
            }
        }
        out.into_iter().map(|p| self.algebra.normal_form(&p)).collect()
    }

    fn sq_monomial(&self, i: u32, m: &Monomial) -> Result<Polynomial, Mod2Error> {
        let ring = self.algebra.ring();
        let mut acc = vec![ring.zero(); i as usize + 1];
        acc[0] = ring.one();
        for (g, &e) in m.exps().iter().enumerate() {
            let mut s = 0;
            while e >> s != 0 {
                if (e >> s) & 1 == 1 {
                    let f = self.total_square_of_power(g, s, i)?;
                    acc = self.truncated_product(&acc, &f);
                }
                s += 1;
            }
        }
        Ok(acc.pop().expect("length i + 1"))
    }

    /// `Sq^i(p)` in normal form. `p` may be any representative, so applying
    /// this to a relation tests that the relation ideal is closed under squares.
    pub fn sq(&self, i: u32, p: &Polynomial) -> Result<Polynomial, Mod2Error> {
        if p.ring() != self.algebra.ring() {
            return Err(Mod2Error::WrongAlgebra(self.algebra.name().to_string()));
        }
        let mut out = self.algebra.ring().zero();
        for m in p.monomials() {
            out = &out + &self.sq_monomial(i, m)?;
        }
        Ok(self.algebra.normal_form(&out))
    }

    /// Parse in the algebra's alphabet, then square.
    pub fn sq_str(&self, i: u32, text: &str) -> Result<Polynomial, Mod2Error> {
        let p = self.algebra.ring().parse(text).map_err(|e| match e {
            crate::poly::PolyError::UnknownVariable(v) => Mod2Error::UnknownGenerator(v),
            other => other.into(),
        })?;
        self.sq(i, &p)
    }
}
