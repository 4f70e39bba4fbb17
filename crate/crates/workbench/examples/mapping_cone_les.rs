//! The suspended mapping cone of a morphism, its long exact sequence,
//! and the tangent spaces it computes.

use dgla_workbench::coeff::dg_point;
use dgla_workbench::cone::{def_on_c0, extended_tangent, long_exact_sequence, tangent_space};
use dgla_workbench::corpus::uwz_inclusion;

fn main() {
    let chi = uwz_inclusion();

    let les = long_exact_sequence(&chi).unwrap();
    println!("cone cohomology dims: {:?}", les.h_cone.dims());
    println!("long exact sequence exact: {}", les.exact);
    for node in &les.nodes {
        println!("  exact at {} degree {}: {}", node.at, node.degree, node.exact);
    }

    // first-order deformations two ways: H^1 of the cone, and the
    // functor on the dual numbers
    let t = tangent_space(&chi).unwrap();
    println!("tangent dim (cone side): {}", t.dim);
    println!("tangent dim (functor side): {}", t.def_side.dim);
    println!("transport matrix invertible: {}", t.iso.inverse().is_ok());

    // higher/lower tangents via shifted dg-points
    for n in -1..=3 {
        let et = extended_tangent(&chi, n).unwrap();
        println!(
            "extended tangent n={n}: cone {} functor {}",
            et.cone_dim, et.def_side.dim
        );
    }

    let d = def_on_c0(&chi, &dg_point(0)).unwrap();
    println!("functor on the dual numbers again: dim {}", d.dim);
}
