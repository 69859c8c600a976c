//! Writes the minimal primes of the binary conditional independence ideal of a
//! square, used as `fixtures/square_ci.json`.
//!
//! The square has vertices s1, s2, r1, r2 and edges s1-s2, r1-r2, s1-r1, s2-r2.
//! Its statements are s1 _||_ r2 | {s2, r1} and s2 _||_ r1 | {s1, r2}. Cells are
//! ordered lexicographically in (s1, s2, r1, r2), so the separator cell (s1, s2)
//! is the grading class.
//!
//! Every minimal prime of a binomial ideal is a coordinate ideal on some set Z
//! of cells plus a lattice ideal on the remaining cells. For each Z the binomials
//! that survive setting x_Z = 0 span a lattice L; Z is admissible when no
//! binomial loses exactly one term. The candidate is x_Z plus the ideal of the
//! saturation of L, whose generators come from the Markov engine. Candidates are
//! compared by containment and the minimal ones are written out.
//!
//! Run with `cargo run --release -p decomp --example square_fixture > fixtures/square_ci.json`.

use lattice_core::matrix::integer_kernel;
use decomp::poly::dense_to_mono;
use decomp::{write_decomposition, ComponentIdeal, Decomposition, Monomial, Polynomial, Ring};
use lattice_core::{Grading, IntMatrix, VectorConfiguration};
use markov_engine::markov_basis;

const N: usize = 16;

fn cell(s1: usize, s2: usize, r1: usize, r2: usize) -> usize {
    8 * s1 + 4 * s2 + 2 * r1 + r2
}

/// Quadrics `(plus, minus)` of the two statements.
fn ci_quadrics() -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    // s1 _||_ r2 given (s2, r1)
    for s2 in 0..2 {
        for r1 in 0..2 {
            out.push((
                vec![cell(0, s2, r1, 0), cell(1, s2, r1, 1)],
                vec![cell(0, s2, r1, 1), cell(1, s2, r1, 0)],
            ));
        }
    }
    // s2 _||_ r1 given (s1, r2)
    for s1 in 0..2 {
        for r2 in 0..2 {
            out.push((
                vec![cell(s1, 0, 0, r2), cell(s1, 1, 1, r2)],
                vec![cell(s1, 0, 1, r2), cell(s1, 1, 0, r2)],
            ));
        }
    }
    out
}

fn vector(plus: &[usize], minus: &[usize]) -> Vec<i64> {
    let mut v = vec![0i64; N];
    plus.iter().for_each(|&i| v[i] += 1);
    minus.iter().for_each(|&i| v[i] -= 1);
    v
}

fn hits(z: u32, vars: &[usize]) -> bool {
    vars.iter().any(|&i| z >> i & 1 == 1)
}

/// Whether `v` is an integer combination of `gens`, given that it is a rational one.
fn in_integer_span(gens: &[Vec<i64>], v: &[i64]) -> bool {
    let mut cols: Vec<Vec<i64>> = gens.to_vec();
    cols.push(v.to_vec());
    let m = IntMatrix::from_columns(N, &cols).unwrap();
    let kernel = integer_kernel(&m).unwrap();
    let g = kernel.iter().fold(0i64, |g, k| gcd(g, k[gens.len()]));
    g == 1
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

struct Candidate {
    zero: u32,
    /// Rows whose kernel is the saturated lattice (unit rows on `zero` included).
    perp: Vec<Vec<i64>>,
    /// Markov basis of the saturated lattice, as vectors on all cells.
    moves: Vec<Vec<i64>>,
}

fn candidate(zero: u32, quadrics: &[(Vec<usize>, Vec<usize>)]) -> Option<Candidate> {
    let mut gens = Vec::new();
    for (p, m) in quadrics {
        match (hits(zero, p), hits(zero, m)) {
            (true, true) => {}
            (false, false) => gens.push(vector(p, m)),
            _ => return None,
        }
    }
    let perp = if gens.is_empty() {
        IntMatrix::identity(N).to_rows()
    } else {
        integer_kernel(&IntMatrix::from_rows(N, &gens).unwrap()).unwrap()
    };
    let sat = integer_kernel(&IntMatrix::from_rows(N, &perp).unwrap()).unwrap();
    for v in &sat {
        assert!(in_integer_span(&gens, v), "lattice of {zero:#x} is not saturated");
    }
    let free: Vec<usize> = (0..N).filter(|&i| zero >> i & 1 == 0).collect();
    let mut moves = Vec::new();
    if !sat.is_empty() {
        let rows: Vec<Vec<i64>> = perp.iter().map(|r| free.iter().map(|&i| r[i]).collect()).collect();
        let cfg = VectorConfiguration::plain(IntMatrix::from_rows(free.len(), &rows).unwrap()).unwrap();
        for m in markov_basis(&cfg).unwrap().basis.iter() {
            let mut v = vec![0i64; N];
            for (&i, &x) in free.iter().zip(m.as_slice()) {
                v[i] = x as i64;
            }
            moves.push(v);
        }
    }
    Some(Candidate { zero, perp, moves })
}

/// Whether the prime of `a` is contained in the prime of `b`.
fn contained(a: &Candidate, b: &Candidate) -> bool {
    if a.zero & !b.zero != 0 {
        return false;
    }
    a.moves.iter().all(|u| {
        let plus: Vec<usize> = (0..N).filter(|&i| u[i] > 0).collect();
        let minus: Vec<usize> = (0..N).filter(|&i| u[i] < 0).collect();
        match (hits(b.zero, &plus), hits(b.zero, &minus)) {
            (true, true) => true,
            (false, false) => b.perp.iter().all(|r| r.iter().zip(u).map(|(x, y)| x * y).sum::<i64>() == 0),
            _ => false,
        }
    })
}

fn exponent(u: &[i64], sign: i64) -> Monomial {
    let e: Vec<u32> = u.iter().map(|&x| if x * sign > 0 { x.unsigned_abs() as u32 } else { 0 }).collect();
    dense_to_mono(&e)
}

fn main() {
    let quadrics = ci_quadrics();
    let cands: Vec<Candidate> = (0..1u32 << N).filter_map(|z| candidate(z, &quadrics)).collect();
    let minimal: Vec<&Candidate> = cands
        .iter()
        .filter(|a| !cands.iter().any(|b| b.zero != a.zero && contained(b, a)))
        .collect();
    eprintln!("{} admissible cell sets, {} minimal primes", cands.len(), minimal.len());

    let names: Vec<String> = (0..N).map(|c| format!("p{:04b}", c)).collect();
    let components: Vec<ComponentIdeal> = minimal
        .iter()
        .map(|c| {
            let mut gens = Vec::new();
            for i in (0..N).filter(|&i| c.zero >> i & 1 == 1) {
                gens.push(Polynomial::monomial(vec![i as u32]));
            }
            for u in &c.moves {
                gens.push(Polynomial::binomial(exponent(u, 1), exponent(u, -1)));
            }
            ComponentIdeal::explicit(gens, true, true)
        })
        .collect();
    let ring = Ring::class_major(&[4, 4, 4, 4], Grading::unit(4), Some(names)).unwrap();
    let d = Decomposition::new(ring, components).unwrap();
    print!("{}", write_decomposition(&d).unwrap());
}
