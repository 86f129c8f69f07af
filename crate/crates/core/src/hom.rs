//! Near-ring homomorphisms with kernel, image and preimage machinery.

use thiserror::Error;

use crate::grading::GradedNearRing;
use crate::ideals::{certify_ideal, enumerate_ideals, EnumerationError, Ideal};
use crate::mask::SubsetMask;
use crate::near_ring::FiniteNearRing;

/// A certified homomorphism: preserves both operations. Surjectivity is
/// recorded; the kernel is certified as an ideal of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearRingHom {
    map: Vec<usize>,
    source_order: usize,
    target_order: usize,
    surjective: bool,
    kernel: Ideal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("malformed map: {reason}")]
    Malformed { reason: String },
    #[error("map does not preserve addition at ({a}, {b})")]
    NotAdditive { a: usize, b: usize },
    #[error("map does not preserve multiplication at ({a}, {b})")]
    NotMultiplicative { a: usize, b: usize },
    #[error("image {image:?} of a non-surjective hom is not an ideal")]
    ImageNotIdeal { image: Vec<usize> },
}

pub fn validate_hom(
    source: &FiniteNearRing,
    target: &FiniteNearRing,
    map: Vec<usize>,
) -> Result<NearRingHom, HomError> {
    if map.len() != source.order() {
        return Err(HomError::Malformed {
            reason: format!("map has {} entries, expected {}", map.len(), source.order()),
        });
    }
    if let Some(&bad) = map.iter().find(|&&t| t >= target.order()) {
        return Err(HomError::Malformed {
            reason: format!("map value {bad} >= target order {}", target.order()),
        });
    }
    for a in 0..source.order() {
        for b in 0..source.order() {
            if map[source.add(a, b)] != target.add(map[a], map[b]) {
                return Err(HomError::NotAdditive { a, b });
            }
            if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                return Err(HomError::NotMultiplicative { a, b });
            }
        }
    }
    let mut hit = SubsetMask::empty(target.order());
    for &t in &map {
        hit.insert(t);
    }
    let kernel_mask = SubsetMask::from_indices(
        source.order(),
        (0..source.order()).filter(|&a| map[a] == target.zero()),
    )
    .expect("kernel indices are in range");
    let kernel = certify_ideal(source, kernel_mask)
        .expect("the kernel of a near-ring homomorphism is an ideal");
    Ok(NearRingHom {
        map,
        source_order: source.order(),
        target_order: target.order(),
        surjective: hit == SubsetMask::full(target.order()),
        kernel,
    })
}

impl NearRingHom {
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn surjective(&self) -> bool {
        self.surjective
    }

    pub fn kernel(&self) -> &Ideal {
        &self.kernel
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn image_mask(&self, s: SubsetMask) -> SubsetMask {
        let mut out = SubsetMask::empty(self.target_order);
        for a in s.iter() {
            out.insert(self.map[a]);
        }
        out
    }

    pub fn preimage_mask(&self, t: SubsetMask) -> SubsetMask {
        SubsetMask::from_indices(
            self.source_order,
            (0..self.source_order).filter(|&a| t.contains(self.map[a])),
        )
        .expect("preimage indices are in range")
    }
}

/// Set-level preimage of a target ideal, certified in the source. Preimages
/// of ideals under homomorphisms are always ideals.
pub fn preimage_ideal(h: &NearRingHom, source: &FiniteNearRing, j: &Ideal) -> Ideal {
    certify_ideal(source, h.preimage_mask(j.members()))
        .expect("the preimage of an ideal is an ideal")
}

/// Set-level image of a source ideal. Under a surjective hom this is always
/// an ideal of the target; otherwise it is certified and may fail.
pub fn image_ideal(
    h: &NearRingHom,
    target: &FiniteNearRing,
    i: &Ideal,
) -> Result<Ideal, HomError> {
    let image = h.image_mask(i.members());
    certify_ideal(target, image).map_err(|_| HomError::ImageNotIdeal {
        image: image.indices(),
    })
}

/// Witness that a hom fails to respect grading components on some ideal:
/// the image of the ideal's grade-g part differs from the grade-g part of
/// the ideal's image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentRespectWitness {
    pub ideal: SubsetMask,
    pub grade: usize,
    pub image_of_component: SubsetMask,
    pub component_of_image: SubsetMask,
}

/// Check `h(I_g) = (h(I))_g` for every enumerated ideal of the source and
/// every grade. Both gradings must share the same grade monoid.
pub fn component_respect_witness(
    h: &NearRingHom,
    source: &GradedNearRing,
    target: &GradedNearRing,
    budget: usize,
) -> Result<Option<ComponentRespectWitness>, EnumerationError> {
    assert_eq!(
        source.monoid(),
        target.monoid(),
        "component respect needs a shared grade monoid"
    );
    for ideal in enumerate_ideals(source.ring(), budget)? {
        let image = h.image_mask(ideal.members());
        for g in 0..source.grade_count() {
            let image_of_component = h.image_mask(source.component(ideal.members(), g));
            let component_of_image = target.component(image, g);
            if image_of_component != component_of_image {
                return Ok(Some(ComponentRespectWitness {
                    ideal: ideal.members(),
                    grade: g,
                    image_of_component,
                    component_of_image,
                }));
            }
        }
    }
    Ok(None)
}

pub fn hom_respects_components(
    h: &NearRingHom,
    source: &GradedNearRing,
    target: &GradedNearRing,
    budget: usize,
) -> Result<bool, EnumerationError> {
    Ok(component_respect_witness(h, source, target, budget)?.is_none())
}
