use std::collections::{BTreeMap, BTreeSet};

use super::{in_span, pair_basis, pair_unchecked, Context, SubspaceId, Triple};
use crate::lie::{bracket_basis, BasisVector, LieElement};
use crate::linalg;
use crate::report::Report;
use crate::scalar::RationalFn;

/// Checks the Manin triple axioms on window `w`.
pub fn verify_triple(triple: Triple, w: i32) -> Report {
    let ctx = Context::new(triple, None);
    let alg = triple.algebra();
    let mut rep = Report::new(format!("verify triple --id {} --window {w}", triple.id))
        .with_context("triple", triple.name())
        .with_context("algebra", alg)
        .with_context("form", format!("{:?}", triple.form))
        .with_context("window", w);

    let basis = alg.basis(w);
    let mut bad = None;
    'outer: for x in &basis {
        for y in &basis {
            for z in &basis {
                let lhs = bracket_basis(x, y).map_or(0, |(k, v)| k * pair_basis(triple.form, &v, z));
                let rhs = bracket_basis(x, z).map_or(0, |(k, v)| k * pair_basis(triple.form, y, &v));
                if lhs + rhs != 0 {
                    bad = Some(format!("x = {x:?}, y = {y:?}, z = {z:?}: {lhs} + {rhs}"));
                    break 'outer;
                }
            }
        }
    }
    rep.record("invariance", "<[x,y],z> + <y,[x,z]> = 0", bad.is_none(), || bad.unwrap());

    let plus = ctx.family(SubspaceId::PPlus, w).expect("p+ family");
    let minus = ctx.family(SubspaceId::PMinus, w).expect("p- family");

    for (label, fam, sub) in [("p+", &plus, SubspaceId::PPlus), ("p-", &minus, SubspaceId::PMinus)] {
        let big = ctx.family(sub, 2 * w + 2).expect("closure family");
        let mut bad = None;
        'sub: for (i, a) in fam.iter().enumerate() {
            for b in &fam[i + 1..] {
                let c = a.bracket(b).expect("same algebra");
                if !c.is_zero() && !in_span(&big, &c) {
                    bad = Some(format!("[{a}, {b}] = {c}"));
                    break 'sub;
                }
            }
        }
        rep.record(format!("{label} is a subalgebra"), "[p, p] in p", bad.is_none(), || bad.unwrap());
    }

    let mut union = ctx.family(SubspaceId::PPlus, w + 1).expect("family");
    union.extend(ctx.family(SubspaceId::PMinus, w + 1).expect("family"));
    let dependent = first_dependent_block(&union);
    let missing = basis.iter().find(|b| {
        let e = LieElement::basis(alg, **b).expect("legal");
        !in_span(&union, &e)
    });
    rep.record(
        "unique decomposition",
        "p = p+ (+) p- as vector spaces",
        dependent.is_none() && missing.is_none(),
        || match (dependent, missing) {
            (Some(d), _) => format!("p+ and p- intersect near {d:?}"),
            (_, Some(m)) => format!("{m:?} not in p+ + p-"),
            _ => unreachable!(),
        },
    );

    for (label, fam) in [("p+", &plus), ("p-", &minus)] {
        let mut bad = None;
        'iso: for (i, a) in fam.iter().enumerate() {
            for b in &fam[i..] {
                let v = pair_unchecked(triple.form, a, b);
                if !v.is_zero() {
                    bad = Some(format!("<{a}, {b}> = {v} != 0"));
                    break 'iso;
                }
            }
        }
        rep.record(format!("isotropy of {label}"), "<p, p> = 0", bad.is_none(), || bad.unwrap());
    }

    let plus_wide = ctx.family(SubspaceId::PPlus, w + 1).expect("family");
    let minus_wide = ctx.family(SubspaceId::PMinus, w + 1).expect("family");
    let r1 = pairing_rank(&ctx, &plus, &minus_wide);
    let r2 = pairing_rank(&ctx, &minus, &plus_wide);
    rep.record(
        "nondegeneracy",
        "p+ -> (p-)* is injective on each graded block",
        r1 == plus.len() && r2 == minus.len(),
        || format!("rank {r1} of {} (p+), rank {r2} of {} (p-)", plus.len(), minus.len()),
    );
    rep
}

fn pairing_rank(ctx: &Context, rows: &[LieElement], cols: &[LieElement]) -> usize {
    let m: Vec<Vec<RationalFn>> = rows
        .iter()
        .map(|a| cols.iter().map(|b| pair_unchecked(ctx.form(), a, b)).collect())
        .collect();
    linalg::rank(&m, cols.len())
}

/// Splits `family` into blocks of vectors connected through shared basis
/// vectors and returns a basis vector of the first block that is linearly
/// dependent.
fn first_dependent_block(family: &[LieElement]) -> Option<BasisVector> {
    let mut owner: BTreeMap<BasisVector, usize> = BTreeMap::new();
    let mut parent: Vec<usize> = (0..family.len()).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for (i, v) in family.iter().enumerate() {
        for (b, _) in v.terms() {
            if let Some(&j) = owner.get(b) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            } else {
                owner.insert(*b, i);
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..family.len() {
        let r = find(&mut parent, i);
        blocks.entry(r).or_default().push(i);
    }
    for members in blocks.values() {
        let support: BTreeSet<BasisVector> =
            members.iter().flat_map(|&i| family[i].terms().map(|(b, _)| *b)).collect();
        let idx: BTreeMap<BasisVector, usize> = support.iter().enumerate().map(|(k, b)| (*b, k)).collect();
        let rows: Vec<Vec<RationalFn>> = members
            .iter()
            .map(|&i| {
                let mut r = vec![RationalFn::zero(); idx.len()];
                for (b, c) in family[i].terms() {
                    r[idx[b]] = c.clone();
                }
                r
            })
            .collect();
        if linalg::rank(&rows, idx.len()) < rows.len() {
            return support.into_iter().next();
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manin::{PairingId, TripleId};

    #[test]
    fn standard_triples_pass() {
        for id in [TripleId::D, TripleId::L, TripleId::A] {
            let r = verify_triple(Triple::new(id), 3);
            assert!(r.passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn loop_form_breaks_isotropy() {
        let r = verify_triple(Triple::with_form(TripleId::L, PairingId::LoopForm), 3);
        let failed: Vec<_> = r.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, vec!["isotropy of p+", "nondegeneracy"]);
    }
}
