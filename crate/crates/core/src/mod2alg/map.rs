use std::sync::Arc;

use crate::poly::Polynomial;

use super::{Mod2Error, PresentedAlgebra};

/// Proof that a map is well defined: each source relation's image reduced to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapCertificate {
    pub relations_checked: usize,
}

/// A degree-preserving algebra map given by generator images.
#[derive(Debug, Clone)]
pub struct AlgebraMap {
    name: String,
    source: Arc<PresentedAlgebra>,
    target: Arc<PresentedAlgebra>,
    images: Vec<Polynomial>,
    certificate: Option<MapCertificate>,
}

impl AlgebraMap {
    /// Build and certify a map from `(generator, image)` strings.
    /// Every source generator must be given an image.
    pub fn new(
        name: impl Into<String>,
        source: Arc<PresentedAlgebra>,
        target: Arc<PresentedAlgebra>,
        images: &[(&str, &str)],
    ) -> Result<Self, Mod2Error> {
        Self::unchecked(name, source, target, images)?.certify()
    }

    /// Build without checking relations; [`AlgebraMap::apply`] refuses to run
    /// until [`AlgebraMap::certify`] succeeds.
    pub fn unchecked(
        name: impl Into<String>,
        source: Arc<PresentedAlgebra>,
        target: Arc<PresentedAlgebra>,
        images: &[(&str, &str)],
    ) -> Result<Self, Mod2Error> {
        let mut slots: Vec<Option<Polynomial>> = vec![None; source.generators().len()];
        for (gen, text) in images {
            let i = source.index_of(gen)?;
            slots[i] = Some(target.parse(text)?);
        }
        let images = slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| s.ok_or_else(|| Mod2Error::MissingImage(source.generators()[i].clone())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_images(name, source, target, images)
    }

    /// Images indexed like the source generators.
    pub fn from_images(
        name: impl Into<String>,
        source: Arc<PresentedAlgebra>,
        target: Arc<PresentedAlgebra>,
        images: Vec<Polynomial>,
    ) -> Result<Self, Mod2Error> {
        if images.len() != source.generators().len() {
            return Err(Mod2Error::MissingImage(format!(
                "{} images for {} generators",
                images.len(),
                source.generators().len()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            if img.ring() != target.ring() {
                return Err(Mod2Error::WrongAlgebra(target.name().to_string()));
            }
            let want = source.ring().vars().weights()[i];
            if let Some(d) = img.homogeneous_degree().filter(|&d| d != want) {
                return Err(Mod2Error::DegreeMismatch {
                    generator: source.generators()[i].clone(),
                    expected: want,
                    got: d,
                });
            }
            if !img.is_zero() && img.homogeneous_degree().is_none() {
                return Err(Mod2Error::Inhomogeneous(img.to_string()));
            }
        }
        let images = images.iter().map(|p| target.normal_form(p)).collect();
        Ok(AlgebraMap {
            name: name.into(),
            source,
            target,
            images,
            certificate: None,
        })
    }

    /// Check every source relation maps to zero.
    pub fn certify(mut self) -> Result<Self, Mod2Error> {
        for rel in self.source.groebner_basis() {
            let img = self.raw_apply(rel);
            if !img.is_zero() {
                return Err(Mod2Error::NotWellDefined {
                    map: self.name.clone(),
                    relation: rel.to_string(),
                    image: img.to_string(),
                });
            }
        }
        self.certificate = Some(MapCertificate {
            relations_checked: self.source.groebner_basis().len(),
        });
        Ok(self)
    }

    fn raw_apply(&self, p: &Polynomial) -> Polynomial {
        let img = p
            .substitute_all(self.target.ring(), &self.images)
            .expect("images live in the target ring");
        self.target.normal_form(&img)
    }

    /// Image of an element of the source, in target normal form.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial, Mod2Error> {
        if self.certificate.is_none() {
            return Err(Mod2Error::Uncertified(self.name.clone()));
        }
        if p.ring() != self.source.ring() {
            return Err(Mod2Error::WrongAlgebra(self.source.name().to_string()));
        }
        Ok(self.raw_apply(p))
    }

    /// Parse in the source alphabet, then apply.
    pub fn apply_str(&self, text: &str) -> Result<Polynomial, Mod2Error> {
        let p = self.source.parse(text)?;
        self.apply(&p)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Arc<PresentedAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PresentedAlgebra> {
        &self.target
    }

    pub fn image_of(&self, generator: &str) -> Result<&Polynomial, Mod2Error> {
        Ok(&self.images[self.source.index_of(generator)?])
    }

    pub fn certificate(&self) -> Option<&MapCertificate> {
        self.certificate.as_ref()
    }
}
