//! Cross-checks library invariants against independently computed reference
//! values: binomial closed forms for f-vectors, Fibonacci identities for
//! generating-function derivatives, dimension tables frozen to six
//! significant digits, Betti vectors of named graphs (tesseract complement,
//! circulant complements, grid-Cayley complements, dihedral-Cayley
//! complements), a Möbius/Mertens oracle for the divisibility complex, and a
//! verified two-step recursion for the dihedral f-polynomials.

use num_rational::BigRational;
use whitney::complex::{clique_complex, dual_cycle_complex, dual_path_complex, DEFAULT_SIMPLEX_CAP};
use whitney::graph::{circulant_graph, cycle_complement, dihedral_cayley_complement, path_complement, prime_graph, Graph};
use whitney::hodge::betti_vector;
use whitney::homotopy::{classify_homotopy_type, HomotopyClass};
use whitney::poly::{generating_function, jacobsthal_cycle, jacobsthal_path, rat, rat_int, rational_to_f64, RationalPoly};

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result * (n - i) as u128 / (i + 1) as u128;
    }
    result as u64
}

/// Compares Betti vectors up to trailing zeros.
fn betti_eq(actual: &[i64], expected: &[i64]) -> bool {
    let w = actual.len().max(expected.len());
    (0..w).all(|k| {
        actual.get(k).copied().unwrap_or(0) == expected.get(k).copied().unwrap_or(0)
    })
}

#[test]
fn f_vectors_match_independent_set_closed_forms() {
    // Simplices of the cycle complement are independent sets of the cycle:
    // there are (n/(n−s))·C(n−s, s) of size s; for the path complement the
    // count is C(n−s+1, s).
    for n in 4..=24u64 {
        let c = dual_cycle_complex(n as usize, DEFAULT_SIMPLEX_CAP).unwrap();
        for (k, &count) in c.f_vector().iter().enumerate() {
            let s = k as u64 + 1;
            let expected = n * binomial(n - s, s) / (n - s);
            assert_eq!(count, expected, "cycle complement n={n}, simplex size {s}");
        }
    }
    for n in 4..=24u64 {
        let c = dual_path_complex(n as usize, DEFAULT_SIMPLEX_CAP).unwrap();
        for (k, &count) in c.f_vector().iter().enumerate() {
            let s = k as u64 + 1;
            assert_eq!(count, binomial(n - s + 1, s), "path complement n={n}, simplex size {s}");
        }
    }
}

#[test]
fn f_vectors_satisfy_the_two_step_pascal_recursion() {
    // f_k(G_n) = f_k(G_{n−1}) + f_{k−1}(G_{n−2}) with the convention
    // f_{−1} = 1, equivalently f_n(t) = f_{n−1}(t) + t·f_{n−2}(t).
    let polys: Vec<RationalPoly> = (4..=24)
        .map(|n| generating_function(&dual_cycle_complex(n, DEFAULT_SIMPLEX_CAP).unwrap()))
        .collect();
    for i in 2..polys.len() {
        let expected = polys[i - 1].add(&polys[i - 2].shift(1));
        assert_eq!(polys[i], expected, "recursion fails at n={}", i + 4);
    }
}

#[test]
fn generating_functions_match_jacobsthal_polynomials() {
    for n in 4..=18 {
        let c = dual_cycle_complex(n, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(generating_function(&c), jacobsthal_cycle(n), "cycle n={n}");
        let p = dual_path_complex(n, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(generating_function(&p), jacobsthal_path(n as i64), "path n={n}");
    }
}

#[test]
fn derivative_at_one_is_n_times_fibonacci() {
    // f'_{G_n}(1) = n·F(n−1) with the standard Fibonacci numbers
    // F(1) = F(2) = 1; this is what makes the dimension expectation
    // (a Fibonacci ratio) converge.
    let mut fib = vec![0i64, 1, 1];
    for i in 3..=24 {
        fib.push(fib[i - 1] + fib[i - 2]);
    }
    let one = rat_int(1);
    for n in 4..=24usize {
        let f = generating_function(&dual_cycle_complex(n, DEFAULT_SIMPLEX_CAP).unwrap());
        let derivative = f.derivative().evaluate(&one);
        assert_eq!(
            derivative,
            rat_int(n as i64 * fib[n - 1]),
            "derivative identity fails at n={n}"
        );
    }
}

#[test]
fn dimension_table_of_cycle_complements() {
    // (n, inductive dim, 2·dim expectation − 1, cohomology dim, maximal dim),
    // floats frozen to the published precision.
    let rows: &[(usize, f64, f64, usize, usize)] = &[
        (4, 1.0, 1.28571, 0, 1),
        (5, 1.0, 1.72727, 1, 1),
        (6, 1.66667, 2.33333, 1, 2),
        (7, 2.0, 2.86207, 1, 2),
        (8, 2.46667, 3.42553, 2, 3),
        (9, 2.88889, 3.97368, 2, 3),
        (10, 3.32381, 4.52846, 2, 4),
        (11, 3.75556, 5.0804, 3, 4),
        (12, 4.18801, 5.63354, 3, 5),
        (13, 4.62032, 6.18618, 3, 5),
        (14, 5.05265, 6.73903, 4, 6),
    ];
    for &(n, ind, exp2, coho, maxd) in rows {
        let g = cycle_complement(n).unwrap();
        let c = clique_complex(&g, DEFAULT_SIMPLEX_CAP).unwrap();
        let inductive = rational_to_f64(&g.inductive_dimension().unwrap());
        assert!((inductive - ind).abs() < 1e-4, "inductive dim n={n}: {inductive} vs {ind}");
        let f = generating_function(&c);
        let one = rat_int(1);
        let expectation = &f.derivative().evaluate(&one) / &f.evaluate(&one);
        let expectation = rational_to_f64(&(rat_int(2) * expectation - one));
        assert!((expectation - exp2).abs() < 1e-4, "dim expectation n={n}: {expectation} vs {exp2}");
        let betti = betti_vector(&c);
        assert_eq!(betti.iter().rposition(|&b| b != 0).unwrap(), coho, "coho dim n={n}");
        assert_eq!(c.max_dim().unwrap(), maxd, "max dim n={n}");
    }
}

#[test]
fn dimension_table_of_path_complements() {
    let rows: &[(usize, f64, f64, usize, usize)] = &[
        (4, 1.0, 1.5, 0, 1),
        (5, 1.46667, 2.07692, 1, 2),
        (6, 1.88889, 2.61905, 1, 2),
        (7, 2.32381, 3.17647, 0, 3),
        (8, 2.75556, 3.72727, 2, 3),
        (9, 3.18801, 4.2809, 2, 4),
        (10, 3.62032, 4.83333, 0, 4),
        (11, 4.05265, 5.38627, 3, 5),
        (12, 4.48499, 5.93899, 3, 5),
        (13, 4.91732, 6.4918, 0, 6),
        (14, 5.34965, 7.04458, 4, 6),
    ];
    for &(n, ind, exp2, coho, maxd) in rows {
        let g = path_complement(n).unwrap();
        let c = clique_complex(&g, DEFAULT_SIMPLEX_CAP).unwrap();
        let inductive = rational_to_f64(&g.inductive_dimension().unwrap());
        assert!((inductive - ind).abs() < 1e-4, "inductive dim n={n}: {inductive} vs {ind}");
        let f = generating_function(&c);
        let one = rat_int(1);
        let expectation = &f.derivative().evaluate(&one) / &f.evaluate(&one);
        let expectation = rational_to_f64(&(rat_int(2) * expectation - one));
        assert!((expectation - exp2).abs() < 1e-4, "dim expectation n={n}: {expectation} vs {exp2}");
        let betti = betti_vector(&c);
        assert_eq!(betti.iter().rposition(|&b| b != 0).unwrap(), coho, "coho dim n={n}");
        assert_eq!(c.max_dim().unwrap(), maxd, "max dim n={n}");
    }
}

#[test]
fn suspension_factor_divides_every_fourth_generating_function() {
    // f_{G_n} is divisible by (1 + 2t) when n ≡ 2 (mod 4); check the root
    // at t = −1/2 and one explicit factorization:
    // f_{G_6} = (2t + 1)(t² + 4t + 1).
    let minus_half = rat(-1, 2);
    for n in [6usize, 10, 14, 18] {
        let f = generating_function(&dual_cycle_complex(n, DEFAULT_SIMPLEX_CAP).unwrap());
        assert_eq!(f.evaluate(&minus_half), rat_int(0), "no root at -1/2 for n={n}");
    }
    let f6 = generating_function(&dual_cycle_complex(6, DEFAULT_SIMPLEX_CAP).unwrap());
    let factored = RationalPoly::from_ints(&[1, 2]).mul(&RationalPoly::from_ints(&[1, 4, 1]));
    assert_eq!(f6, factored);
}

/// Cayley graph of Z_p × Z_q with generators (±1, 0) and (0, ±1).
fn grid_cayley(p: usize, q: usize) -> Graph {
    let mut g = Graph::new(p * q);
    for i in 0..p {
        for j in 0..q {
            g.add_edge(i * q + j, ((i + 1) % p) * q + j);
            g.add_edge(i * q + j, i * q + (j + 1) % q);
        }
    }
    g.with_label(format!("grid-cayley({p}x{q})"))
}

#[test]
fn named_complements_have_frozen_betti_vectors() {
    // Tesseract: the Cayley graph of Z₄ × Z₄; its complement is a wedge of
    // seven 3-spheres.
    let tesseract = grid_cayley(4, 4).complement();
    let c = clique_complex(&tesseract, DEFAULT_SIMPLEX_CAP).unwrap();
    assert!(betti_eq(&betti_vector(&c), &[1, 0, 0, 7]));

    // Z₄ × Z₅ is neither a sphere nor a wedge of spheres.
    let g45 = grid_cayley(4, 5).complement();
    let c45 = clique_complex(&g45, DEFAULT_SIMPLEX_CAP).unwrap();
    assert!(betti_eq(&betti_vector(&c45), &[1, 0, 0, 2, 1]));

    // Complement of the circulant Ci_20(2,3,4,7,13).
    let ci = circulant_graph(20, &[2, 3, 4, 7, 13]).unwrap().complement();
    let cci = clique_complex(&ci, DEFAULT_SIMPLEX_CAP).unwrap();
    assert!(betti_eq(&betti_vector(&cci), &[1, 1, 0, 5, 0]));
}

#[test]
fn dihedral_complements_match_frozen_table() {
    let rows: &[(usize, i64, &[i64])] = &[
        (4, -2, &[1, 3, 0, 0]),
        (5, 0, &[1, 1, 0, 0]),
        (6, 2, &[1, 0, 1, 0, 0]),
        (7, 0, &[1, 0, 0, 1, 0, 0]),
        (8, -2, &[1, 0, 0, 3, 0, 0, 0, 0]),
        (9, 0, &[1, 0, 0, 1, 0, 0, 0, 0]),
        (10, 2, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
        (11, 0, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
        (12, -2, &[1, 0, 0, 0, 0, 3, 0, 0, 0, 0]),
    ];
    for &(n, chi, expected) in rows {
        let g = dihedral_cayley_complement(n).unwrap();
        let c = clique_complex(&g, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(c.euler_characteristic(), chi, "chi at n={n}");
        let betti = betti_vector(&c);
        assert!(betti_eq(&betti, expected), "betti at n={n}: {betti:?} vs {expected:?}");
    }
}

#[test]
fn dihedral_complements_are_spheres_or_triple_wedges() {
    for n in 4..=10usize {
        let g = dihedral_cayley_complement(n).unwrap();
        let report = classify_homotopy_type(&g).unwrap();
        if n % 4 == 0 {
            // Wedge of three spheres of middle dimension.
            assert_eq!(report.class, HomotopyClass::Wedge(n / 4 * 2 - 1, 3), "n={n}");
        } else {
            let d = match n % 4 {
                1 => (n - 1) / 2 - 1,
                2 => (n - 2) / 2,
                _ => (n - 3) / 2 + 1,
            };
            assert_eq!(report.class, HomotopyClass::Sphere(d), "n={n}");
        }
    }
}

#[test]
fn dihedral_f_polynomials_satisfy_verified_recursion() {
    // f_n(t) = (1+t)·f_{n−1}(t) + t·f_{n−2}(t) + 2·(−1)^n·t^n.
    let poly = |n: usize| {
        let g = dihedral_cayley_complement(n).unwrap();
        generating_function(&clique_complex(&g, DEFAULT_SIMPLEX_CAP).unwrap())
    };
    let mut prev2 = poly(4);
    let mut prev1 = poly(5);
    for n in 6..=12usize {
        let current = poly(n);
        let tail_coeff = if n % 2 == 0 { 2 } else { -2 };
        let mut tail = vec![BigRational::from_integer(0.into()); n + 1];
        tail[n] = rat_int(tail_coeff);
        let expected = prev1
            .add(&prev1.shift(1))
            .add(&prev2.shift(1))
            .add(&RationalPoly::from_coeffs(tail));
        assert_eq!(current, expected, "dihedral recursion fails at n={n}");
        prev2 = prev1;
        prev1 = current;
    }
}

#[test]
fn divisibility_complex_euler_characteristic_is_one_minus_mertens() {
    // Independent Möbius sieve.
    let max = 40usize;
    let mut mu = vec![1i64; max + 1];
    for k in 2..=max {
        let mut m = k;
        let mut count = 0;
        let mut squarefree = true;
        let mut d = 2;
        while d * d <= m {
            if m % d == 0 {
                m /= d;
                count += 1;
                if m % d == 0 {
                    squarefree = false;
                    break;
                }
            }
            d += 1;
        }
        if m > 1 {
            count += 1;
        }
        mu[k] = if squarefree { if count % 2 == 0 { 1 } else { -1 } } else { 0 };
    }
    let mut mertens = 0i64;
    for n in 1..=max {
        mertens += mu[n];
        if n < 2 {
            continue;
        }
        let g = prime_graph(n).unwrap();
        let c = clique_complex(&g, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(c.euler_characteristic(), 1 - mertens, "n={n}");
    }
}
