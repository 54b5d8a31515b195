//! Prints the prime graph of PSp4(q) together with its order components.
//!
//! Usage: cargo run --example prime_graph -- [q]

use psp4::primegraph::psp4_graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    let graph = psp4_graph(q)?;
    println!("vertices {:?}", graph.vertices);
    println!("edges {:?}", graph.edges);
    for (component, part) in graph.components.iter().zip(&graph.order_components) {
        println!("component {component:?} with order component {part}");
    }
    for f in 2..=12 {
        let q = 1u64 << f;
        println!("q = {q:>5}: {} components", psp4_graph(q)?.component_count());
    }
    Ok(())
}
