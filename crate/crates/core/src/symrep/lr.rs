//! Littlewood–Richardson coefficients by counting LR tableaux.

use super::partition::{partitions, Partition};

/// `c^lambda_{mu nu}`: fillings of `lambda / mu` with content `nu`, rows
/// weakly increasing, columns strictly increasing, and right-to-left,
/// top-to-bottom reading word a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return 0;
    }
    let lam = lambda.parts();
    let mu_at = |r: usize| mu.parts().get(r).copied().unwrap_or(0);
    let mut cells = Vec::new();
    for (r, &len) in lam.iter().enumerate() {
        for c in (mu_at(r)..len).rev() {
            cells.push((r, c));
        }
    }
    let mut fill: Vec<Vec<usize>> = lam.iter().map(|&l| vec![0; l]).collect();
    let mut used = vec![0usize; nu.len() + 1];
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        fill: &mut Vec<Vec<usize>>,
        used: &mut Vec<usize>,
        nu: &[usize],
        mu_at: &dyn Fn(usize) -> usize,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let mut total = 0;
        for v in 1..=nu.len() {
            if used[v] >= nu[v - 1] || (v > 1 && used[v] + 1 > used[v - 1]) {
                continue;
            }
            if c + 1 < fill[r].len() && fill[r][c + 1] != 0 && v > fill[r][c + 1] {
                continue;
            }
            if r > 0 && c >= mu_at(r - 1) && c < fill[r - 1].len() && v <= fill[r - 1][c] {
                continue;
            }
            fill[r][c] = v;
            used[v] += 1;
            total += go(k + 1, cells, fill, used, nu, mu_at);
            used[v] -= 1;
            fill[r][c] = 0;
        }
        total
    }
    go(0, &cells, &mut fill, &mut used, nu.parts(), &mu_at)
}

/// Restriction of `V_p` to `S_a × S_b` as `((mu, nu), multiplicity)`.
pub fn lr_restrict(p: &Partition, a: usize, b: usize) -> Vec<((Partition, Partition), u64)> {
    assert_eq!(a + b, p.size(), "a + b must equal |p|");
    let mut out = Vec::new();
    for mu in partitions(a) {
        if !p.contains(&mu) {
            continue;
        }
        for nu in partitions(b) {
            let c = lr_coefficient(p, &mu, &nu);
            if c > 0 {
                out.push(((mu.clone(), nu), c));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn known_coefficients() {
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[1]), &p(&[1, 1])), 0);
    }

    #[test]
    fn trivial_restricts_to_trivial() {
        let r = lr_restrict(&p(&[5]), 2, 3);
        assert_eq!(r, vec![((p(&[2]), p(&[3])), 1)]);
    }
}
