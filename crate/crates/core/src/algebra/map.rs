use super::context::{same_ctx, Ctx};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Polynomial map `source -> target`, given by the images of the target coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMap {
    source: Ctx,
    target: Ctx,
    images: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(source: &Ctx, target: &Ctx, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != target.len() {
            return Err(Error::DimensionMismatch {
                expected: target.len(),
                got: images.len(),
            });
        }
        if images.iter().any(|p| !same_ctx(p.ctx(), source)) {
            return Err(Error::ContextMismatch);
        }
        Ok(PolyMap {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn identity(ctx: &Ctx) -> Self {
        let images = (0..ctx.len()).map(|i| Polynomial::var(ctx, i)).collect();
        PolyMap {
            source: ctx.clone(),
            target: ctx.clone(),
            images,
        }
    }

    pub fn source(&self) -> &Ctx {
        &self.source
    }

    pub fn target(&self) -> &Ctx {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// `f ∘ self`.
    pub fn pull(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ctx(f.ctx(), &self.target) {
            return Err(Error::ContextMismatch);
        }
        f.substitute(&self.source, &self.images)
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &PolyMap) -> Result<PolyMap> {
        if !same_ctx(&self.target, &other.source) {
            return Err(Error::ContextMismatch);
        }
        let images = other
            .images
            .iter()
            .map(|p| self.pull(p))
            .collect::<Result<Vec<_>>>()?;
        PolyMap::new(&self.source, &other.target, images)
    }
}
