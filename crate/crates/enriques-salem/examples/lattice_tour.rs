//! A tour of the two coordinate models: Gram forms, signatures and the
//! distinguished classes with their exact pairings.
//!
//! Run with: cargo run --example lattice_tour

use enriques_salem::lattice::{signature, FBasisModel, Pair, PetersenModel};

fn main() {
    let f_model = FBasisModel::build();
    println!("isotropic-sequence model:");
    println!("  gram signature: {:?}", signature(f_model.gram()));
    println!(
        "  (delta, delta) = {}",
        f_model.inner(f_model.delta(), f_model.delta())
    );
    println!(
        "  (delta, f_1) = {}, (f_1, f_2) = {}",
        f_model.inner(f_model.delta(), &f_model.f(1)),
        f_model.inner(&f_model.f(1), &f_model.f(2)),
    );
    for i in 1..=4 {
        let r = f_model.nodal_class(i).unwrap();
        println!(
            "  nodal class r_{},{}: {:?} with square {}",
            i,
            i + 1,
            r.coords,
            f_model.inner(&r.coords, &r.coords)
        );
    }

    println!();
    let petersen = PetersenModel::build();
    println!("Petersen model:");
    println!("  gram determinant: {}", petersen.gram().det());
    println!("  gram signature: {:?}", signature(petersen.gram()));
    let p12 = Pair::new(1, 2).unwrap();
    let p34 = Pair::new(3, 4).unwrap();
    let p13 = Pair::new(1, 3).unwrap();
    println!(
        "  (U_12, U_34) = {}, (U_12, U_13) = {}",
        petersen.inner(&petersen.u_of(p12), &petersen.u_of(p34)),
        petersen.inner(&petersen.u_of(p12), &petersen.u_of(p13)),
    );
    println!("  f_12 in U-coordinates: {:?}", petersen.f_of(p12));
    println!(
        "  alpha pairings: (a_12, a_13) = {}, (a_12, a_45) = {}",
        petersen.inner(petersen.alpha_of(p12), petersen.alpha_of(p13)),
        petersen.inner(
            petersen.alpha_of(p12),
            petersen.alpha_of(Pair::new(4, 5).unwrap())
        ),
    );
}
