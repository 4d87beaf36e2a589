use ddc_core::ddc::{isolatedness_indices, Quadruple};
use ddc_core::mpoly::*;
use std::collections::BTreeMap;
use std::time::Instant;

fn main() {
    let q = Quadruple::new(3, 2, 17, 34).unwrap();
    let t0 = Instant::now();
    let (table, gens) = build_system_generators(&q);
    println!(
        "gens: {} elements, term counts {:?} ({:.1?})",
        gens.len(),
        gens.iter().map(|g| g.terms().len()).collect::<Vec<_>>(),
        t0.elapsed()
    );
    // mimic existence_check pre-substitution effects
    let plan = q.support_plan();
    let mut assignments = BTreeMap::new();
    assignments.insert(table.index_of("a0").unwrap(), 1u64); // -u^{-1} = -(2^-1) = 1
    for &mi in &plan.forced_zero {
        assignments.insert(table.a_var(&q, mi), 0);
    }
    let t1 = Instant::now();
    let grid: Vec<Vec<MultiPoly>> = isolatedness_indices(&q)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|idx| match idx {
                    Some(i) => MultiPoly::var(&table, 3, table.a_var(&q, i)).substitute(&assignments),
                    None => MultiPoly::zero(&table, 3),
                })
                .collect()
        })
        .collect();
    let h = det_symbolic(&table, 3, &grid);
    println!("h: {} terms, degree {} ({:.1?})", h.terms().len(), h.max_degree(), t1.elapsed());
    let y_an = MultiPoly::var(&table, 3, table.y_var())
        .mul(&MultiPoly::var(&table, 3, table.a_var(&q, q.n())))
        .unwrap();
    let rab = MultiPoly::constant(&table, 3, 1).sub(&y_an.mul(&h).unwrap()).unwrap();
    println!("rabinowitsch: {} terms, degree {}", rab.terms().len(), rab.max_degree());
    let subbed: Vec<MultiPoly> = gens
        .iter()
        .map(|g| g.substitute(&assignments))
        .filter(|g| !g.is_zero())
        .chain(std::iter::once(rab))
        .collect();
    println!(
        "substituted gens: {} elements, terms {:?}",
        subbed.len(),
        subbed.iter().map(|g| g.terms().len()).collect::<Vec<_>>()
    );
    // run a handful of buchberger pairs with tight progress
    let ord = MonomialOrder::degrevlex_rev(&table);
    let t2 = Instant::now();
    let mut last = Instant::now();
    let mut progress = move |pairs: u64, size: usize| {
        if last.elapsed().as_millis() >= 1000 {
            eprintln!("  pairs={pairs} basis={size} t={:.0?}", t2.elapsed());
            last = Instant::now();
        }
    };
    let mut controls = GroebnerControls {
        progress: Some(&mut progress),
        ..Default::default()
    };
    match buchberger_with(&subbed, &ord, &mut controls) {
        Ok((b, pairs)) => println!("basis {} in {} pairs, {:.1?}", b.len(), pairs, t2.elapsed()),
        Err(e) => println!("error {e} at {:.1?}", t2.elapsed()),
    }
}
