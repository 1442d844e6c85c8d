use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use num_integer::binomial;
use serde::{Deserialize, Serialize};

use super::{subobject_poset, TriangularCategory};
use crate::error::{Error, Result};

/// An injective isotone map `{1, .., dom} -> {1, .., cod}`, stored as its
/// strictly increasing image.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawDelta", into = "RawDelta")]
pub struct DeltaMorphism {
    cod: usize,
    image: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawDelta {
    dom: usize,
    cod: usize,
    image: Vec<usize>,
}

impl TryFrom<RawDelta> for DeltaMorphism {
    type Error = Error;

    fn try_from(raw: RawDelta) -> Result<Self> {
        if raw.image.len() != raw.dom {
            return Err(Error::InvalidDeltaMorphism(format!(
                "image has {} entries but the domain is {}",
                raw.image.len(),
                raw.dom
            )));
        }
        DeltaMorphism::new(raw.cod, raw.image)
    }
}

impl From<DeltaMorphism> for RawDelta {
    fn from(f: DeltaMorphism) -> Self {
        RawDelta { dom: f.dom(), cod: f.cod, image: f.image }
    }
}

impl DeltaMorphism {
    pub fn new(cod: usize, image: Vec<usize>) -> Result<Self> {
        if image.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidDeltaMorphism(format!("{image:?} is not strictly increasing")));
        }
        if image.iter().any(|&x| x == 0 || x > cod) {
            return Err(Error::InvalidDeltaMorphism(format!("{image:?} leaves 1..={cod}")));
        }
        Ok(DeltaMorphism { cod, image })
    }

    pub fn identity(n: usize) -> Self {
        DeltaMorphism { cod: n, image: (1..=n).collect() }
    }

    pub fn dom(&self) -> usize {
        self.image.len()
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Value at the 1-based position `t`.
    pub fn apply(&self, t: usize) -> usize {
        self.image[t - 1]
    }
}

impl fmt::Display for DeltaMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{} {:?}", self.dom(), self.cod, self.image)
    }
}

/// The `k`-subsets of `{1, .., n}` in lexicographic order, as maps.
pub fn delta_hom(k: usize, n: usize) -> Vec<DeltaMorphism> {
    if k > n {
        return Vec::new();
    }
    (1..=n)
        .combinations(k)
        .map(|image| DeltaMorphism { cod: n, image })
        .collect()
}

/// `g . f`: position `t` goes to `g(f(t))`.
pub fn delta_compose(g: &DeltaMorphism, f: &DeltaMorphism) -> Result<DeltaMorphism> {
    if f.cod != g.dom() {
        return Err(Error::CompositionMismatch { cod: f.cod, dom: g.dom() });
    }
    let image = f.image.iter().map(|&t| g.apply(t)).collect();
    Ok(DeltaMorphism { cod: g.cod, image })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CategoryDelta;

impl TriangularCategory for CategoryDelta {
    type Morphism = DeltaMorphism;

    fn name(&self) -> &'static str {
        "Delta"
    }

    fn dom(&self, f: &DeltaMorphism) -> usize {
        f.dom()
    }

    fn cod(&self, f: &DeltaMorphism) -> usize {
        f.cod
    }

    fn hom(&self, k: usize, n: usize) -> Vec<DeltaMorphism> {
        delta_hom(k, n)
    }

    fn hom_count(&self, k: usize, n: usize) -> BigUint {
        if k > n {
            BigUint::from(0u32)
        } else {
            binomial(BigUint::from(n), BigUint::from(k))
        }
    }

    fn identity(&self, n: usize) -> DeltaMorphism {
        DeltaMorphism::identity(n)
    }

    fn compose(&self, g: &DeltaMorphism, f: &DeltaMorphism) -> Result<DeltaMorphism> {
        delta_compose(g, f)
    }
}

/// Checks that sending each subobject of `n` in Delta to its image set is an
/// order isomorphism onto the subsets of `{1, .., n}` under inclusion.
pub fn check_boolean_iso(n: usize) -> bool {
    let Ok(poset) = subobject_poset(&CategoryDelta, n) else {
        return false;
    };
    let images: Vec<BTreeSet<usize>> = poset
        .elements()
        .iter()
        .map(|f| f.image().iter().copied().collect())
        .collect();
    let distinct: BTreeSet<&BTreeSet<usize>> = images.iter().collect();
    let injective = distinct.len() == images.len();
    let surjective = u32::try_from(n).is_ok_and(|n| n < usize::BITS && images.len() == 1usize << n);
    let order_preserving = (0..poset.len()).all(|a| {
        (0..poset.len()).all(|b| poset.leq(a, b) == images[a].is_subset(&images[b]))
    });
    injective && surjective && order_preserving
}
