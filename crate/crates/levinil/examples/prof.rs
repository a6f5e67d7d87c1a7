use std::time::Instant;
use levinil::sl2::Sl2Action;
use levinil::mat::unit_vec;
use levinil::rat::Rat;

fn main() {
    let f = levinil::freenil::free_nilpotent(11, 3).unwrap();
    let ext = f.extend_sl2(&Sl2Action::irreducible(10)).unwrap();

    let t = Instant::now();
    let raw = levinil::fixtures::table2();
    let act = levinil::fixtures::table2_action();
    let target = levinil::repair::repair_equivariant(&raw, &act).unwrap().repaired;
    println!("load+repair table2: {:?}", t.elapsed());

    let t = Instant::now();
    let gens: Vec<Vec<Rat>> = (0..11).map(|i| unit_vec(52, i)).collect();
    let hom = f.natural_hom(&target, &gens).unwrap();
    println!("natural_hom incl. verification: {:?}", t.elapsed());

    let t = Instant::now();
    assert!(f.algebra.is_ideal(&hom.kernel));
    println!("is_ideal(kernel 454): {:?}", t.elapsed());

    let t = Instant::now();
    let rep = levinil::levi::Representation::sl2(&ext);
    let ker_ideal = levinil::levi::SIdeal::analyze(&f, &rep, hom.kernel.clone());
    println!("SIdeal::analyze (ideal+invariant+homogeneous): {:?}", t.elapsed());
    assert!(!ker_ideal.is_homogeneous);

    let t = Instant::now();
    let deg2 = f.degree_subspace(2);
    let act2 = ext.restrict(&deg2).unwrap();
    let dec2 = act2.decompose().unwrap();
    let mut extra_p = levinil::subspace::Subspace::zero(f.dim());
    for w in [10usize, 2] {
        let hw = dec2.hw_space(w).unwrap();
        let v = deg2.from_coords(&hw.basis().row_vec(0));
        extra_p = extra_p.sum(&ext.submodule_generated(&[v])).unwrap();
    }
    let gq = levinil::levi::nonhomogeneous_graph_quotient(&f, &ext, 14, &levinil::rat::one(), &extra_p, None).unwrap();
    println!("graph quotient: {:?} (dim {})", t.elapsed(), gq.quotient.dim());
}
