//! Line-oriented text format for algebras, maps and square tables.
//!
//! ```text
//! # comment
//! algebra toda
//! y2 2
//! y9 9
//! order y9 y2          # optional precedence, most significant first
//! rel y2*y9
//! squares wu           # or `chern`; free Stiefel–Whitney / Chern rings
//! map k3 -> toda: x1 = y3
//! sq toda 1 y9 = 0
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use crate::report::VerificationReport;

use super::{AlgebraMap, Mod2Error, PresentedAlgebra, SquareRule, SteenrodAction};

#[derive(Default)]
struct AlgebraSpec {
    line: usize,
    gens: Vec<(String, u32)>,
    order: Option<Vec<String>>,
    rels: Vec<String>,
    squares: Option<String>,
}

/// Algebras, maps and square tables loaded from text.
#[derive(Debug, Default)]
pub struct AlgebraLibrary {
    algebras: BTreeMap<String, Arc<PresentedAlgebra>>,
    maps: BTreeMap<(String, String), AlgebraMap>,
    rules: BTreeMap<String, String>,
    tables: BTreeMap<String, Vec<(String, u32, String)>>,
}

fn err(line: usize, msg: impl Into<String>) -> Mod2Error {
    Mod2Error::Format { line, msg: msg.into() }
}

impl AlgebraLibrary {
    /// The built-in presentations and maps.
    pub fn builtin() -> Self {
        Self::parse(include_str!("../../data/bpu4.alg")).expect("built-in algebra data is valid")
    }

    pub fn parse(text: &str) -> Result<Self, Mod2Error> {
        let mut specs: Vec<(String, AlgebraSpec)> = Vec::new();
        let mut maps: Vec<(usize, String, String, String, String)> = Vec::new();
        let mut sqs: Vec<(usize, String, u32, String, String)> = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (head, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
            let rest = rest.trim();
            match head {
                "algebra" => {
                    if rest.is_empty() || rest.contains(char::is_whitespace) {
                        return Err(err(line, "expected `algebra NAME`"));
                    }
                    if specs.iter().any(|(s, _)| s == rest) {
                        return Err(err(line, format!("algebra {rest} defined twice")));
                    }
                    specs.push((rest.to_string(), AlgebraSpec { line, ..Default::default() }));
                }
                "map" => {
                    let (arrow, assign) = rest
                        .split_once(':')
                        .ok_or_else(|| err(line, "expected `map SRC -> TGT: GEN = POLY`"))?;
                    let (src, tgt) = arrow
                        .split_once("->")
                        .ok_or_else(|| err(line, "expected `SRC -> TGT`"))?;
                    let (g, v) = assign
                        .split_once('=')
                        .ok_or_else(|| err(line, "expected `GEN = POLY`"))?;
                    maps.push((
                        line,
                        src.trim().to_string(),
                        tgt.trim().to_string(),
                        g.trim().to_string(),
                        v.trim().to_string(),
                    ));
                }
                "sq" => {
                    let (lhs, v) = rest
                        .split_once('=')
                        .ok_or_else(|| err(line, "expected `sq ALG I GEN = POLY`"))?;
                    let parts: Vec<&str> = lhs.split_whitespace().collect();
                    let [alg, i, g] = parts[..] else {
                        return Err(err(line, "expected `sq ALG I GEN = POLY`"));
                    };
                    let i: u32 = i.parse().map_err(|_| err(line, format!("bad square index {i}")))?;
                    sqs.push((line, alg.to_string(), i, g.to_string(), v.trim().to_string()));
                }
                _ => {
                    let Some((_, spec)) = specs.last_mut() else {
                        return Err(err(line, format!("`{head}` outside an algebra block")));
                    };
                    match head {
                        "order" => spec.order = Some(rest.split_whitespace().map(str::to_string).collect()),
                        "rel" => spec.rels.push(rest.to_string()),
                        "squares" => spec.squares = Some(rest.to_string()),
                        name => {
                            let d: u32 = rest
                                .parse()
                                .map_err(|_| err(line, format!("expected `NAME DEGREE`, got `{body}`")))?;
                            if d == 0 {
                                return Err(err(line, "generator degrees must be positive"));
                            }
                            spec.gens.push((name.to_string(), d));
                        }
                    }
                }
            }
        }

        let mut lib = AlgebraLibrary::default();
        for (name, spec) in specs {
            let gens = match &spec.order {
                None => spec.gens.clone(),
                Some(order) => {
                    if order.len() != spec.gens.len() {
                        return Err(err(spec.line, format!("order for {name} must list every generator once")));
                    }
                    order
                        .iter()
                        .map(|o| {
                            spec.gens
                                .iter()
                                .find(|(g, _)| g == o)
                                .cloned()
                                .ok_or_else(|| err(spec.line, format!("order names unknown generator {o}")))
                        })
                        .collect::<Result<Vec<_>, _>>()?
                }
            };
            let alg = PresentedAlgebra::new(name.clone(), &gens, &spec.rels)
                .map_err(|e| err(spec.line, format!("algebra {name}: {e}")))?;
            if let Some(rule) = spec.squares {
                if rule != "wu" && rule != "chern" {
                    return Err(err(spec.line, format!("unknown square rule {rule}")));
                }
                lib.rules.insert(name.clone(), rule);
            }
            lib.algebras.insert(name, Arc::new(alg));
        }

        // (source, target) -> (first line, generator images)
        type Grouped = BTreeMap<(String, String), (usize, Vec<(String, String)>)>;
        let mut grouped: Grouped = BTreeMap::new();
        for (line, s, t, g, v) in maps {
            let e = grouped.entry((s, t)).or_insert((line, Vec::new()));
            e.1.push((g, v));
        }
        for ((s, t), (line, imgs)) in grouped {
            let src = lib.get(&s).map_err(|e| err(line, e.to_string()))?;
            let tgt = lib.get(&t).map_err(|e| err(line, e.to_string()))?;
            let pairs: Vec<(&str, &str)> = imgs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            let m = AlgebraMap::new(format!("{s}->{t}"), src, tgt, &pairs).map_err(|e| err(line, e.to_string()))?;
            lib.maps.insert((s, t), m);
        }

        for (line, alg, i, g, v) in sqs {
            let a = lib.get(&alg).map_err(|e| err(line, e.to_string()))?;
            a.index_of(&g).map_err(|e| err(line, e.to_string()))?;
            let d = a.degree_of(&g)?;
            let value = a.parse(&v).map_err(|e| err(line, e.to_string()))?;
            if !value.is_zero() && value.homogeneous_degree() != Some(d + i) {
                return Err(err(line, format!("Sq^{i}({g}) must have degree {}", d + i)));
            }
            lib.tables.entry(alg).or_default().push((g, i, v));
        }
        Ok(lib)
    }

    pub fn get(&self, name: &str) -> Result<Arc<PresentedAlgebra>, Mod2Error> {
        self.algebras
            .get(name)
            .cloned()
            .ok_or_else(|| Mod2Error::UnknownAlgebra(name.to_string()))
    }

    pub fn algebra_names(&self) -> impl Iterator<Item = &str> {
        self.algebras.keys().map(String::as_str)
    }

    pub fn map(&self, source: &str, target: &str) -> Result<&AlgebraMap, Mod2Error> {
        self.maps
            .get(&(source.to_string(), target.to_string()))
            .ok_or_else(|| Mod2Error::UnknownAlgebra(format!("map {source} -> {target}")))
    }

    /// Table entries `(generator, i, value)` declared for an algebra.
    pub fn table(&self, algebra: &str) -> &[(String, u32, String)] {
        self.tables.get(algebra).map_or(&[], Vec::as_slice)
    }

    /// The Steenrod action declared for an algebra, from `squares` or `sq` lines.
    pub fn action(&self, algebra: &str) -> Result<SteenrodAction, Mod2Error> {
        let alg = self.get(algebra)?;
        match self.rules.get(algebra).map(String::as_str) {
            Some("wu") => Ok(SteenrodAction::new(alg, SquareRule::StiefelWhitney)),
            Some("chern") => Ok(SteenrodAction::new(alg, SquareRule::Chern)),
            _ => {
                let entries: Vec<(&str, u32, &str)> = self
                    .table(algebra)
                    .iter()
                    .map(|(g, i, v)| (g.as_str(), *i, v.as_str()))
                    .collect();
                SteenrodAction::from_table(alg, &entries)
            }
        }
    }
}

impl AlgebraLibrary {
    fn has_action(&self, algebra: &str) -> bool {
        self.rules.contains_key(algebra) || self.tables.contains_key(algebra)
    }

    /// Internal consistency of a library: each declared action kills every
    /// relation under `Sq^1, Sq^2, Sq^4, Sq^8`, and each map between algebras
    /// with actions commutes with those squares on generators. Squares a table
    /// leaves underdetermined are skipped and counted in the witness.
    pub fn verify(&self) -> Result<VerificationReport, Mod2Error> {
        let start = Instant::now();
        let mut report = VerificationReport::new("presentation");
        for name in self.algebra_names() {
            if !self.has_action(name) {
                continue;
            }
            let alg = self.get(name)?;
            let action = self.action(name)?;
            let (mut bad, mut skipped) = (Vec::new(), 0);
            for i in [1, 2, 4, 8] {
                for r in alg.relations() {
                    match action.sq(i, r) {
                        Ok(s) if !s.is_zero() => bad.push(format!("Sq^{i}({r}) = {s}")),
                        Ok(_) => {}
                        Err(Mod2Error::Underdetermined { .. }) => skipped += 1,
                        Err(e) => return Err(e),
                    }
                }
            }
            report.check(
                format!("{name}_relations_closed"),
                bad.is_empty(),
                format!("Sq^i kills every relation of {name} for i = 1, 2, 4, 8"),
                if bad.is_empty() { format!("{skipped} skipped") } else { bad.join("; ") },
            );
        }
        for ((s, t), map) in &self.maps {
            if !(self.has_action(s) && self.has_action(t)) {
                continue;
            }
            let (src, tgt) = (self.action(s)?, self.action(t)?);
            let (mut bad, mut skipped) = (Vec::new(), 0);
            for g in map.source().generators() {
                let x = map.source().gen(g)?;
                for i in [1, 2, 4, 8] {
                    let lhs = src.sq(i, &x).and_then(|v| map.apply(&v));
                    let rhs = map.apply(&x).and_then(|v| tgt.sq(i, &v));
                    match (lhs, rhs) {
                        (Ok(a), Ok(b)) if a != b => bad.push(format!("Sq^{i}({g}): {a} vs {b}")),
                        (Ok(_), Ok(_)) => {}
                        (Err(Mod2Error::Underdetermined { .. }), _) | (_, Err(Mod2Error::Underdetermined { .. })) => {
                            skipped += 1
                        }
                        (Err(e), _) | (_, Err(e)) => return Err(e),
                    }
                }
            }
            report.check(
                format!("{s}_to_{t}_commutes"),
                bad.is_empty(),
                format!("{s} -> {t} commutes with Sq^i on generators for i = 1, 2, 4, 8"),
                if bad.is_empty() { format!("{skipped} skipped") } else { bad.join("; ") },
            );
        }
        report.elapsed_ms = start.elapsed().as_millis() as u64;
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_small_library() {
        let text = "algebra a\nx 1\ny 2\norder y x\nrel x^2*y\nalgebra b\nt 1\nmap a -> b: x = t\nmap a -> b: y = 0\nsq a 1 x = x^2\n";
        let lib = AlgebraLibrary::parse(text).unwrap();
        let a = lib.get("a").unwrap();
        assert_eq!(a.generators(), ["y", "x"]);
        assert_eq!(lib.map("a", "b").unwrap().apply_str("x^3").unwrap().to_string(), "t^3");
        assert_eq!(lib.table("a").len(), 1);
    }

    #[test]
    fn reports_line_numbers() {
        let bad = "algebra a\nx one\n";
        assert!(matches!(AlgebraLibrary::parse(bad), Err(Mod2Error::Format { line: 2, .. })));
        let stray = "x 1\n";
        assert!(matches!(AlgebraLibrary::parse(stray), Err(Mod2Error::Format { line: 1, .. })));
        let ill = "algebra a\nx 1\nrel x^2\nalgebra b\nt 1\nmap a -> b: x = t\n";
        assert!(matches!(AlgebraLibrary::parse(ill), Err(Mod2Error::Format { line: 6, .. })));
    }

    #[test]
    fn inconsistent_table_fails_verification() {
        let text = "algebra bad\nb 2\na 1\nrel b + a^2\nsq bad 1 b = a*b\n";
        let r = AlgebraLibrary::parse(text).unwrap().verify().unwrap();
        assert!(!r.passed(), "{}", r.to_text());
    }

    #[test]
    fn builtin_verifies() {
        let r = AlgebraLibrary::builtin().verify().unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn builtin_loads() {
        let lib = AlgebraLibrary::builtin();
        for name in ["toda", "bu4", "bso6", "bso3", "k3", "hz", "w"] {
            lib.get(name).unwrap();
        }
    }
}
