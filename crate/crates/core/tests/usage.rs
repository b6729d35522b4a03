use arcnerve::homotopy::collection_homotopy;
use arcnerve::{Angle, Arc, ArcCollection, HomotopyType, Rational, Variant};

#[test]
fn six_half_arcs() -> arcnerve::Result<()> {
    let arcs = (0..6)
        .map(|i| Arc::new(Angle::from_ratio(i, 6), Rational::new(1.into(), 2.into())))
        .collect::<Result<Vec<_>, _>>()?;
    let (h, reduction) = collection_homotopy(&ArcCollection::new(arcs)?, Variant::Nerve)?;
    assert_eq!((reduction.n_prime, reduction.k_prime), (6, 3));
    assert_eq!(h, HomotopyType::wedge(2, 2));
    assert_eq!(h.to_string(), "vee^2 S^2");
    Ok(())
}
