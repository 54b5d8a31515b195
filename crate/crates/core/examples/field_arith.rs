//! Inverses and multiplicative orders in GF(2^f).
//!
//! Usage: cargo run --example field_arith -- [f]

use psp4::gf2::FieldSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    let field = FieldSpec::new(f)?;
    println!("GF(2^{f}) with modulus {:#b}", field.modulus());
    let g = field.find_generator();
    println!("generator {:#x} has order {}", g.bits(), field.multiplicative_order(g)?);
    for a in field.elements().skip(1).take(6) {
        let inv = field.inv(a)?;
        println!(
            "{:#06x}: inverse {:#06x}, product {:#x}, order {}",
            a.bits(),
            inv.bits(),
            field.mul(a, inv).bits(),
            field.multiplicative_order(a)?
        );
    }
    Ok(())
}
