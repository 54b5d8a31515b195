//! Prime graph (Gruenberg–Kegel graph) of a group given its spectrum and order.
//!
//! Vertices are the primes dividing the order; p and s are adjacent when ps
//! divides some element order. Adjacency is recomputed from the spectrum rather
//! than stored, and components come from union-find.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, factorize_u64};
use crate::error::{Error, Result};
use crate::sympl::{group_order, spectrum};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeGraph {
    pub vertices: Vec<u64>,
    pub edges: Vec<(u64, u64)>,
    /// Connected components; the one containing 2 comes first.
    pub components: Vec<Vec<u64>>,
    /// `order_components[k]` is the part of the order supported on `components[k]`.
    pub order_components: Vec<BigUint>,
}

impl PrimeGraph {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn component_of(&self, p: u64) -> Option<usize> {
        self.components.iter().position(|c| c.contains(&p))
    }

    pub fn adjacent(&self, p: u64, s: u64) -> bool {
        let key = (p.min(s), p.max(s));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn to_json(&self) -> PrimeGraphJson {
        PrimeGraphJson {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
            components: self.components.clone(),
            order_components: self.order_components.iter().map(|n| n.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeGraphJson {
    pub vertices: Vec<u64>,
    pub edges: Vec<[u64; 2]>,
    pub components: Vec<Vec<u64>>,
    pub order_components: Vec<String>,
}

pub fn build_graph(spectrum: &[u64], order: &BigUint) -> Result<PrimeGraph> {
    for &member in spectrum {
        if member == 0 || !(order % member).is_zero() {
            return Err(Error::SpectrumNotDividing { member, order: order.clone() });
        }
    }
    let order_factors = factorize(order);
    let vertices: Vec<u64> = order_factors.primes_u64();

    let mut edges = BTreeSet::new();
    for (a, &p) in vertices.iter().enumerate() {
        for &s in &vertices[a + 1..] {
            let ps = p as u128 * s as u128;
            if spectrum.iter().any(|&m| (m as u128).is_multiple_of(ps)) {
                edges.insert((p, s));
            }
        }
    }

    let mut uf = UnionFind::<usize>::new(vertices.len());
    let index = |p: u64| vertices.binary_search(&p).expect("edge endpoints are vertices");
    for &(p, s) in &edges {
        uf.union(index(p), index(s));
    }
    let mut groups: Vec<Vec<u64>> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for (k, &p) in vertices.iter().enumerate() {
        let root = uf.find(k);
        match roots.iter().position(|&r| r == root) {
            Some(slot) => groups[slot].push(p),
            None => {
                roots.push(root);
                groups.push(vec![p]);
            }
        }
    }
    // Vertices are ascending, so each group is sorted and groups are ordered by
    // least prime; 2 is the least prime of any even order.
    let order_components = groups
        .iter()
        .map(|component| {
            component.iter().fold(BigUint::from(1u32), |acc, &p| {
                let p_big = BigUint::from(p);
                acc * p_big.pow(order_factors.exponent_of(&BigUint::from(p)))
            })
        })
        .collect();

    Ok(PrimeGraph {
        vertices,
        edges: edges.into_iter().collect(),
        components: groups,
        order_components,
    })
}

/// Prime graph of PSp4(q).
pub fn psp4_graph(q: u64) -> Result<PrimeGraph> {
    build_graph(&spectrum(q)?, &group_order(q)?)
}

pub fn component_count(graph: &PrimeGraph) -> usize {
    graph.component_count()
}

/// True when no prime of q² + 1 shares a component with a prime of 2(q² - 1).
pub fn separation_check(q: u64) -> Result<bool> {
    let graph = psp4_graph(q)?;
    let odd: Vec<u64> = factorize_u64(q * q + 1).primes_u64();
    let even: Vec<u64> = factorize_u64(2 * (q * q - 1)).primes_u64();
    let comps = |ps: &[u64]| -> BTreeSet<usize> {
        ps.iter().filter_map(|&p| graph.component_of(p)).collect()
    };
    Ok(comps(&odd).is_disjoint(&comps(&even)))
}

/// Order components as `u64`, when they fit.
pub fn order_components_u64(graph: &PrimeGraph) -> Option<Vec<u64>> {
    graph.order_components.iter().map(|n| n.to_u64()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q4_graph() {
        let g = psp4_graph(4).unwrap();
        assert_eq!(g.components, vec![vec![2, 3, 5], vec![17]]);
        assert_eq!(order_components_u64(&g).unwrap(), vec![57_600, 17]);
        assert!(g.adjacent(2, 5));
        assert!(g.adjacent(3, 5));
        assert!(!g.adjacent(5, 17));
    }

    #[test]
    fn q8_graph() {
        let g = psp4_graph(8).unwrap();
        assert_eq!(g.components, vec![vec![2, 3, 7], vec![5, 13]]);
        assert!(g.adjacent(5, 13));
    }

    #[test]
    fn trivial_and_single_vertex() {
        let empty = build_graph(&[1], &BigUint::from(1u32)).unwrap();
        assert!(empty.vertices.is_empty());
        assert_eq!(empty.component_count(), 0);
        let single = build_graph(&[1, 7], &BigUint::from(7u32)).unwrap();
        assert_eq!(component_count(&single), 1);
    }

    #[test]
    fn rejects_non_dividing_member() {
        let err = build_graph(&[1, 2, 9], &BigUint::from(12u32)).unwrap_err();
        assert!(matches!(err, Error::SpectrumNotDividing { member: 9, .. }));
    }

    #[test]
    fn separation() {
        assert!(separation_check(4).unwrap());
        assert!(separation_check(16).unwrap());
    }
}
