use std::fmt;

use crate::poly::{CoeffRing, Monomial, Polynomial, Ring, VarSet};

use super::groebner::{self, GroebnerCertificate};
use super::Mod2Error;

/// A graded-commutative GF(2) algebra `ℤ/2[gens]/(relations)`.
///
/// The underlying ring lists generators in precedence order, so the ring's
/// graded-lex term order (first variable most significant) is the algebra's
/// monomial order.
#[derive(Clone)]
pub struct PresentedAlgebra {
    name: String,
    ring: Ring,
    relations: Vec<Polynomial>,
    gb: Vec<Polynomial>,
    certificate: GroebnerCertificate,
}

impl fmt::Debug for PresentedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PresentedAlgebra")
            .field("name", &self.name)
            .field("generators", &self.ring.vars().names())
            .field("relations", &self.relations.iter().map(ToString::to_string).collect::<Vec<_>>())
            .finish()
    }
}

impl PresentedAlgebra {
    /// Build from `(name, degree)` generators listed by decreasing precedence,
    /// and relation strings in the text polynomial syntax.
    pub fn new<S: AsRef<str>>(
        name: impl Into<String>,
        generators: &[(String, u32)],
        relations: &[S],
    ) -> Result<Self, Mod2Error> {
        let name = name.into();
        let ring = Ring::new(CoeffRing::Modular(2), VarSet::new(generators.iter().cloned()));
        let rels = relations
            .iter()
            .map(|r| ring.parse(r.as_ref()).map_err(Mod2Error::from))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_polynomials(name, ring, rels)
    }

    /// A free algebra on the given generators.
    pub fn free(name: impl Into<String>, generators: &[(&str, u32)]) -> Self {
        let gens: Vec<(String, u32)> = generators.iter().map(|(n, d)| (n.to_string(), *d)).collect();
        Self::new::<&str>(name, &gens, &[]).expect("free algebras have no relations to reject")
    }

    pub fn from_polynomials(
        name: impl Into<String>,
        ring: Ring,
        relations: Vec<Polynomial>,
    ) -> Result<Self, Mod2Error> {
        let name = name.into();
        if ring.coeffs() != CoeffRing::Modular(2) {
            return Err(Mod2Error::NotMod2(name));
        }
        for r in &relations {
            if *r.ring() != ring {
                return Err(Mod2Error::WrongAlgebra(name));
            }
            if !r.is_zero() && r.homogeneous_degree().is_none() {
                return Err(Mod2Error::Inhomogeneous(r.to_string()));
            }
        }
        let gb = groebner::reduced_basis(&relations);
        let certificate = groebner::certify(&gb, &relations)
            .map_err(|w| Mod2Error::GroebnerCertificate(w.to_string()))?;
        Ok(PresentedAlgebra {
            name,
            ring,
            relations,
            gb,
            certificate,
        })
    }

    /// The quotient by additional relations, e.g. a truncation `w3^3`.
    pub fn quotient<S: AsRef<str>>(&self, name: impl Into<String>, extra: &[S]) -> Result<Self, Mod2Error> {
        let mut rels = self.relations.clone();
        for e in extra {
            rels.push(self.ring.parse(e.as_ref())?);
        }
        Self::from_polynomials(name, self.ring.clone(), rels)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[String] {
        self.ring.vars().names()
    }

    pub fn degree_of(&self, generator: &str) -> Result<u32, Mod2Error> {
        let i = self.index_of(generator)?;
        Ok(self.ring.vars().weights()[i])
    }

    pub fn index_of(&self, generator: &str) -> Result<usize, Mod2Error> {
        self.ring
            .vars()
            .index_of(generator)
            .ok_or_else(|| Mod2Error::UnknownGenerator(generator.to_string()))
    }

    pub fn gen(&self, generator: &str) -> Result<Polynomial, Mod2Error> {
        Ok(self.ring.var_named(generator)?)
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn groebner_basis(&self) -> &[Polynomial] {
        &self.gb
    }

    pub fn certificate(&self) -> &GroebnerCertificate {
        &self.certificate
    }

    /// Parse an element in this algebra's generator alphabet and reduce it.
    pub fn parse(&self, text: &str) -> Result<Polynomial, Mod2Error> {
        let p = self.ring.parse(text).map_err(|e| match e {
            crate::poly::PolyError::UnknownVariable(v) => Mod2Error::UnknownGenerator(v),
            other => other.into(),
        })?;
        Ok(self.normal_form(&p))
    }

    /// Unique remainder modulo the Gröbner basis.
    ///
    /// Panics if `p` does not live in this algebra's ring.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        assert!(*p.ring() == self.ring, "element of a different algebra passed to {}", self.name);
        groebner::reduce(p, &self.gb)
    }

    pub fn is_normal(&self, m: &Monomial) -> bool {
        !self.gb.iter().any(|g| g.leading().is_some_and(|(l, _)| l.divides(m)))
    }

    /// Normal-form monomials of degree `d`, largest first.
    pub fn basis(&self, d: u32) -> Vec<Monomial> {
        self.ring
            .graded_basis(d)
            .monomials
            .into_iter()
            .filter(|m| self.is_normal(m))
            .map(|m| self.ring.monomial(m.exps().to_vec()))
            .collect()
    }

    pub fn dimension(&self, d: u32) -> usize {
        self.basis(d).len()
    }

    pub fn monomial_element(&self, m: &Monomial) -> Polynomial {
        self.ring.term(1, m.clone())
    }
}
