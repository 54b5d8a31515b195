//! A small permutation-group engine: closure, element orders, |G_n|.

use std::collections::HashSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::OrderHistogram;
use crate::error::{Error, Result};

/// Default ceiling on the size of a permutation group closure.
pub const PERM_CAP: usize = 1_000_000;

/// Images of 0..degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u32).collect())
    }

    /// Builds a permutation of `degree` points from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for (k, &from) in cycle.iter().enumerate() {
                let to = cycle[(k + 1) % cycle.len()];
                if from as usize >= degree || to as usize >= degree {
                    return Err(Error::InvalidPermutation(format!("point outside 0..{degree}")));
                }
                images[from as usize] = to;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, point: u32) -> u32 {
        self.0[point as usize]
    }

    /// `self` then `other` (left-to-right composition).
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.0.len()];
        let mut order = 1u64;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.0[p] as usize;
                len += 1;
            }
            order = order.lcm(&len);
        }
        order
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermGroupSpec {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl PermGroupSpec {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation(format!(
                "generator of degree {} in a group of degree {degree}",
                g.degree()
            )));
        }
        Ok(PermGroupSpec { degree, generators })
    }

    /// All elements, breadth-first from the identity.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        let id = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut elements = vec![id];
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            head += 1;
            for g in &self.generators {
                let next = current.then(g);
                if !seen.contains(&next) {
                    if elements.len() >= cap {
                        return Err(Error::Capacity { cap });
                    }
                    seen.insert(next.clone());
                    elements.push(next);
                }
            }
        }
        Ok(elements)
    }
}

/// Number of elements of each order.
pub fn perm_nse(spec: &PermGroupSpec) -> Result<OrderHistogram> {
    let mut h = OrderHistogram::new();
    for g in spec.elements(PERM_CAP)? {
        h.record(g.order());
    }
    Ok(h)
}

/// |G_n| = #{x ∈ G : x^n = 1}.
pub fn power_count(spec: &PermGroupSpec, n: u64) -> Result<u64> {
    Ok(perm_nse(spec)?.power_count(n))
}

/// Z7:Z3 on points `offset..offset+7`: a ↦ a+1 and a ↦ 2a.
fn z7_by_z3(degree: usize, offset: u32) -> Result<[Permutation; 2]> {
    let translate_images = shift_map(degree, offset, |a| (a + 1) % 7);
    let doubling = shift_map(degree, offset, |a| (2 * a) % 7);
    Ok([Permutation::new(translate_images)?, Permutation::new(doubling)?])
}

fn shift_map(degree: usize, offset: u32, f: impl Fn(u32) -> u32) -> Vec<u32> {
    (0..degree as u32)
        .map(|p| {
            if (offset..offset + 7).contains(&p) {
                offset + f(p - offset)
            } else {
                p
            }
        })
        .collect()
}

/// G = Z4 × (Z7:Z3) on 11 points: a 4-cycle on 0..4, the Frobenius group of order 21 on 4..11.
pub fn order84_g() -> Result<PermGroupSpec> {
    let degree = 11;
    let four_cycle = Permutation::from_cycles(degree, &[&[0, 1, 2, 3]])?;
    let [t, d] = z7_by_z3(degree, 4)?;
    PermGroupSpec::new(degree, vec![four_cycle, t, d])
}

/// H = Z3 × (Z7:Z4) on 14 points.
///
/// Z4 acts on Z7 through its quotient of order 2 (a ↦ -a), so Z7:Z4 is realized
/// on 11 points: translations and negation on 0..7 for the Z7 and the action, a
/// 4-cycle on 7..11 running alongside the negation so that its square survives
/// as the central involution. The Z3 factor is a 3-cycle on 11..14.
pub fn order84_h() -> Result<PermGroupSpec> {
    let degree = 14;
    let translate = shift_map(degree, 0, |a| (a + 1) % 7);
    let negate = shift_map(degree, 0, |a| (7 - a) % 7);
    let mut b = negate;
    for (k, p) in [7u32, 8, 9, 10].iter().enumerate() {
        b[*p as usize] = 7 + ((k as u32 + 1) % 4);
    }
    let three_cycle = Permutation::from_cycles(degree, &[&[11, 12, 13]])?;
    PermGroupSpec::new(
        degree,
        vec![Permutation::new(translate)?, Permutation::new(b)?, three_cycle],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bad_permutations() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3]).is_err());
        assert!(PermGroupSpec::new(3, vec![Permutation::identity(4)]).is_err());
    }

    #[test]
    fn cycle_orders() {
        let p = Permutation::from_cycles(7, &[&[0, 1], &[2, 3, 4]]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(Permutation::identity(5).order(), 1);
    }

    #[test]
    fn trivial_group_power_count() {
        let trivial = PermGroupSpec::new(3, vec![]).unwrap();
        assert_eq!(power_count(&trivial, 5).unwrap(), 1);
    }

    #[test]
    fn both_groups_have_order_84() {
        assert_eq!(order84_g().unwrap().elements(PERM_CAP).unwrap().len(), 84);
        assert_eq!(order84_h().unwrap().elements(PERM_CAP).unwrap().len(), 84);
    }

    #[test]
    fn symmetric_group_capacity() {
        let s6 = PermGroupSpec::new(
            6,
            vec![
                Permutation::from_cycles(6, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(s6.elements(PERM_CAP).unwrap().len(), 720);
        assert_eq!(s6.elements(100).unwrap_err(), Error::Capacity { cap: 100 });
    }
}
