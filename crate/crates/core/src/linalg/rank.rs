//! Fraction-free elimination over the integers with Markowitz pivoting.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::RationalMatrix;

type Row = Vec<(usize, BigInt)>;

fn primitive(mut row: Row) -> Row {
    let mut g = BigInt::zero();
    for (_, x) in &row {
        g = g.gcd(x);
        if g.is_one() {
            return row;
        }
    }
    if !g.is_zero() {
        for (_, x) in row.iter_mut() {
            *x /= &g;
        }
    }
    row
}

fn integer_rows(m: &RationalMatrix) -> Vec<Row> {
    m.row_vectors()
        .into_iter()
        .map(|r| {
            let mut l = BigInt::one();
            for x in r.values() {
                l = l.lcm(x.denom());
            }
            primitive(r.into_iter().map(|(c, x)| (c, x.numer() * (&l / x.denom()))).collect())
        })
        .collect()
}

/// `a * row - b * pivot`, entries sorted by column.
fn combine(row: &Row, a: &BigInt, pivot: &Row, b: &BigInt) -> Row {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (c, x) = if ci < cj {
            i += 1;
            (ci, a * &row[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(b * &pivot[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, a * &row[i - 1].1 - b * &pivot[j - 1].1)
        };
        if !x.is_zero() {
            out.push((c, x));
        }
    }
    primitive(out)
}

/// Exact rank over the rationals.
pub fn rank(m: &RationalMatrix) -> usize {
    let mut rows: Vec<Option<Row>> = integer_rows(m).into_iter().map(Some).collect();
    let mut by_len: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut col_rows: HashMap<usize, BTreeSet<usize>> = HashMap::new();
    for (i, r) in rows.iter().enumerate() {
        let r = r.as_ref().expect("fresh");
        if r.is_empty() {
            continue;
        }
        by_len.insert((r.len(), i));
        for (c, _) in r {
            col_rows.entry(*c).or_default().insert(i);
        }
    }
    let mut rank = 0;
    while let Some(&(len, p)) = by_len.iter().next() {
        by_len.remove(&(len, p));
        let prow = rows[p].take().expect("live row");
        for (c, _) in &prow {
            col_rows.get_mut(c).expect("indexed").remove(&p);
        }
        rank += 1;
        // Markowitz: among entries of a shortest row, take the sparsest
        // column, preferring unit pivots
        let &(pc, ref pv) = prow
            .iter()
            .min_by_key(|(c, x)| (col_rows[c].len(), !x.abs().is_one(), *c))
            .expect("nonempty row");
        let targets: Vec<usize> = col_rows[&pc].iter().copied().collect();
        for r in targets {
            let old = rows[r].take().expect("live row");
            by_len.remove(&(old.len(), r));
            for (c, _) in &old {
                col_rows.get_mut(c).expect("indexed").remove(&r);
            }
            let b = &old.iter().find(|e| e.0 == pc).expect("pivot column").1;
            let g = pv.gcd(b);
            let new = combine(&old, &(pv / &g), &prow, &(b / &g));
            if !new.is_empty() {
                by_len.insert((new.len(), r));
                for (c, _) in &new {
                    col_rows.entry(*c).or_default().insert(r);
                }
            }
            rows[r] = Some(new);
        }
    }
    rank
}
