use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::freealg::{commutator, left_normed_commutator, left_normed_commutator_of, Polynomial, Word};
use crate::gfp::Prime;
use crate::suite::{CheckDef, CheckKind, Expectation, Run};
use crate::symmetric::{
    collapse_homomorphism, frobenius_expand, linearize_inclusion_exclusion, m_word, s_partial, subset_word_sum,
    sym, witness_w, x_subset_word,
};
use crate::tspace::{family_generators, GeneratorFamily, Status};

fn any_prime(_: u32) -> bool {
    true
}

/// `S_p` with `p` arguments stays within the default arity cap.
fn small_odd_prime(p: u32) -> bool {
    p > 2 && p <= 7
}

fn small_prime(p: u32) -> bool {
    p <= 7
}

fn never(_: u32) -> bool {
    false
}

static CATALOG: &[CheckDef] = &[
    CheckDef {
        id: "C2.1a",
        section: 2,
        kind: CheckKind::Identity,
        description: "S_{d+1} as the sum of S_d over the other variables times the omitted one",
        anchor: "S_{d+1}(x) = sum_i S_d(x_1, ..., x_i omitted, ..., x_{d+1}) x_i",
        expectation: Expectation::Stated,
        expected: "zero residue for d in 1..5",
        primes: &[2, 3, 5],
        admits_override: any_prime,
        stretch: false,
        run: c2_1a,
    },
    CheckDef {
        id: "C2.1b",
        section: 2,
        kind: CheckKind::Identity,
        description: "S_{d+1} as S_d times x_{d+1} plus slot-wise right insertions",
        anchor: "S_{d+1}(x) = S_d(x) x_{d+1} + sum_i S_d(x_1, ..., x_{d+1} x_i, ..., x_d)",
        expectation: Expectation::Stated,
        expected: "zero residue for d in 1..5",
        primes: &[2, 3, 5],
        admits_override: any_prime,
        stretch: false,
        run: c2_1b,
    },
    CheckDef {
        id: "C2.1c",
        section: 2,
        kind: CheckKind::Identity,
        description: "S_{d+1} as x_{d+1} times S_d plus slot-wise left insertions",
        anchor: "S_{d+1}(x) = x_{d+1} S_d(x) + sum_i S_d(x_1, ..., x_i x_{d+1}, ..., x_d)",
        expectation: Expectation::Stated,
        expected: "zero residue for d in 1..5",
        primes: &[2, 3, 5],
        admits_override: any_prime,
        stretch: false,
        run: c2_1c,
    },
    CheckDef {
        id: "C2.2",
        section: 2,
        kind: CheckKind::Membership,
        description: "commutators of S_d with monomials of degree at most 2 lie in R(1,d)",
        anchor: "[S_d(x), u] in R_1^(d)",
        expectation: Expectation::Stated,
        expected: "Member for d in {2,3}",
        primes: &[3],
        admits_override: small_prime,
        stretch: false,
        run: c2_2,
    },
    CheckDef {
        id: "C2.3",
        section: 2,
        kind: CheckKind::Membership,
        description: "S_{d+1} agrees with S_d x_{d+1} and with x_{d+1} S_d modulo R(1,d)",
        anchor: "S_{d+1}(x) = S_d(x) x_{d+1} = x_{d+1} S_d(x) mod R_1^(d)",
        expectation: Expectation::Stated,
        expected: "Member for d in {2,3}",
        primes: &[3],
        admits_override: small_prime,
        stretch: false,
        run: c2_3,
    },
    CheckDef {
        id: "C2.4",
        section: 2,
        kind: CheckKind::Membership,
        description: "d S_{d+1} lies in R(1,d); with p not dividing d this puts S_{d+1} itself in R(1,d)",
        anchor: "d S_{d+1}(x) in R_1^(d)",
        expectation: Expectation::Stated,
        expected: "Member (d=2, p=3, all-ones slice)",
        primes: &[3],
        admits_override: never,
        stretch: false,
        run: c2_4,
    },
    CheckDef {
        id: "C2.5",
        section: 2,
        kind: CheckKind::Membership,
        description: "R(1,d) absorbs multiplication by a variable on either side when p does not divide d",
        anchor: "p does not divide d implies R_1^(d) is an ideal",
        expectation: Expectation::Stated,
        expected: "Member for x3 S_2(x1,x2) and S_2(x1,x2) x3 at p=3",
        primes: &[3],
        admits_override: |p| p != 2 && p <= 7,
        stretch: false,
        run: c2_5,
    },
    CheckDef {
        id: "C2.6",
        section: 2,
        kind: CheckKind::Membership,
        description: "a product of three S_2 blocks in fresh variables lies in R(2,2) at p=2",
        anchor: "d a multiple of p implies R_2^(d) = R_3^(d)",
        expectation: Expectation::DerivedExpectation,
        expected: "Member in the 720-dimensional all-ones slice",
        primes: &[2],
        admits_override: never,
        stretch: false,
        run: c2_6,
    },
    CheckDef {
        id: "C2.6s",
        section: 2,
        kind: CheckKind::Membership,
        description: "stretch variant: a product of three S_3 blocks lies in R(2,3) at p=3",
        anchor: "d a multiple of p implies R_2^(d) = R_3^(d)",
        expectation: Expectation::DerivedExpectation,
        expected: "Member in the 362880-dimensional all-ones slice, subject to budget",
        primes: &[3],
        admits_override: never,
        stretch: true,
        run: c2_6_stretch,
    },
    CheckDef {
        id: "C3.1a",
        section: 3,
        kind: CheckKind::Identity,
        description: "subset-word sum over 2p positions split into its two halves",
        anchor: "sum_{|U|=p} X_{2p}(U) = z1^p z2^p + z2^p z1^p + sum_j (sum_{|U|=j} X_p(U)) (sum_{|U|=p-j} X_p(U))",
        expectation: Expectation::Stated,
        expected: "zero residue",
        primes: &[3],
        admits_override: any_prime,
        stretch: false,
        run: c3_1a,
    },
    CheckDef {
        id: "C3.1b",
        section: 3,
        kind: CheckKind::Identity,
        description: "S_p with repeated arguments collapses to a scaled subset-word sum",
        anchor: "S_p(z1 x j, z2 x (p-j)) = j! (p-j)! sum_{|U|=j} X_p(U)",
        expectation: Expectation::Stated,
        expected: "zero residue for j in 1..p-1",
        primes: &[3],
        admits_override: small_odd_prime,
        stretch: false,
        run: c3_1b,
    },
    CheckDef {
        id: "C3.2",
        section: 3,
        kind: CheckKind::Identity,
        description: "the alternating subset-sum linearization of z^d equals S_d",
        anchor: "sum_{T nonempty} (-1)^(d-|T|) (sum_{i in T} x_i)^d = S_d(x_1, ..., x_d)",
        expectation: Expectation::Stated,
        expected: "zero residue for d in {2,3,4}",
        primes: &[2, 3, 5],
        admits_override: any_prime,
        stretch: false,
        run: c3_2,
    },
    CheckDef {
        id: "C3.3",
        section: 3,
        kind: CheckKind::Membership,
        description: "every R(1,p) generator reduces to zero against the L(1) basis",
        anchor: "R_k^(p) contained in L_k",
        expectation: Expectation::Stated,
        expected: "Member for every generator at {x1:1, x2:2} and {x1:1, x2:1, x3:1}",
        primes: &[3],
        admits_override: never,
        stretch: false,
        run: c3_3,
    },
    CheckDef {
        id: "C3.4",
        section: 3,
        kind: CheckKind::Membership,
        description: "z1^3 z2^3 z3^3 lies in L(2) at p=3",
        anchor: "L_2 = L_3",
        expectation: Expectation::DerivedExpectation,
        expected: "Member in the 1680-dimensional slice {x1:3, x2:3, x3:3}",
        primes: &[3],
        admits_override: never,
        stretch: false,
        run: c3_4,
    },
    CheckDef {
        id: "C4.1",
        section: 4,
        kind: CheckKind::Identity,
        description: "left-normed commutator [x, y, ..., y] as a signed binomial sum of one-x words",
        anchor: "[x, y x n] = sum_{i=1}^{n+1} (-1)^(i+1) C(n, i-1) M_i^(n+1)",
        expectation: Expectation::Stated,
        expected: "zero residue for n in 1..8",
        primes: &[2, 3, 5, 7],
        admits_override: any_prime,
        stretch: false,
        run: c4_1,
    },
    CheckDef {
        id: "C4.2",
        section: 4,
        kind: CheckKind::CoefficientProperty,
        description: "binomials C(p-1, i) alternate in sign modulo p",
        anchor: "C(p-1, i) = (-1)^i mod p",
        expectation: Expectation::Stated,
        expected: "equality for every i in 0..p-1",
        primes: &[2, 3, 5, 7, 11],
        admits_override: any_prime,
        stretch: false,
        run: c4_2,
    },
    CheckDef {
        id: "C4.3",
        section: 4,
        kind: CheckKind::Identity,
        description: "[x, y x (p-1)] is the plain sum of the one-x words M_i^p",
        anchor: "[x, y x (p-1)] = sum_{i=1}^p (-1)^(i+1) C(p-1, i-1) M_i^p = sum_i M_i^p",
        expectation: Expectation::Stated,
        expected: "zero residue",
        primes: &[3, 5],
        admits_override: any_prime,
        stretch: false,
        run: c4_3,
    },
    CheckDef {
        id: "C4.4",
        section: 4,
        kind: CheckKind::Identity,
        description: "S_p with one x and p-1 copies of y is minus the left-normed commutator",
        anchor: "S_p(x, y x (p-1)) = -[x, y x (p-1)]",
        expectation: Expectation::Stated,
        expected: "zero residue",
        primes: &[3, 5, 7],
        admits_override: small_prime,
        stretch: false,
        run: c4_4,
    },
    CheckDef {
        id: "C4.5",
        section: 4,
        kind: CheckKind::Identity,
        description: "S_p as a sum of left-normed commutators starting with x_1",
        anchor: "S_p(x_1, ..., x_p) = sum_{sigma on {2..p}} [x_1, x_sigma(2), ..., x_sigma(p)]",
        expectation: Expectation::Stated,
        expected: "zero residue",
        primes: &[3, 5],
        admits_override: small_prime,
        stretch: false,
        run: c4_5,
    },
    CheckDef {
        id: "C4.6",
        section: 4,
        kind: CheckKind::Membership,
        description: "R(1,p) and the T-space of [x, y, ..., y] contain each other's generators",
        anchor: "R_1^(p) = T-space generated by [x, y x (p-1)]",
        expectation: Expectation::Stated,
        expected: "Member both ways at p=3",
        primes: &[3],
        admits_override: never,
        stretch: false,
        run: c4_6,
    },
    CheckDef {
        id: "C5.1",
        section: 5,
        kind: CheckKind::CoefficientProperty,
        description: "coefficients of (xy)^p and (yx)^p in S_p(u_1, ..., u_p) sum to zero",
        anchor: "coeff((xy)^p) + coeff((yx)^p) = 0 in S_p(u_1, ..., u_p)",
        expectation: Expectation::Stated,
        expected: "zero for 200 seeded random tuples",
        primes: &[3, 5],
        admits_override: small_odd_prime,
        stretch: false,
        run: c5_1,
    },
    CheckDef {
        id: "C5.2",
        section: 5,
        kind: CheckKind::NonMembership,
        description: "the witness w is not in R(1,p); it is in R(2,p)",
        anchor: "R_1^(p) != R_2^(p)",
        expectation: Expectation::Stated,
        expected: "NotMember at {x1:3, x2:3}; companion Member in R(2,3)",
        primes: &[3],
        admits_override: never,
        stretch: false,
        run: c5_2,
    },
    CheckDef {
        id: "C5.3",
        section: 5,
        kind: CheckKind::NonMembership,
        description: "(xy)^p lies in L(1) but not in R(1,p)",
        anchor: "R_1^(p) != L_1",
        expectation: Expectation::Stated,
        expected: "NotMember in R(1,3); Member in L(1)",
        primes: &[3],
        admits_override: never,
        stretch: false,
        run: c5_3,
    },
    CheckDef {
        id: "C5.4",
        section: 5,
        kind: CheckKind::Identity,
        description: "(u+v)^p expands into u^p, v^p and scaled partial symmetrizations",
        anchor: "(u+v)^p = u^p + v^p + sum_i S_p(u, v; i) / (i! (p-i)!)",
        expectation: Expectation::Stated,
        expected: "zero residue for u=x, v=y and for random binomials",
        primes: &[3, 5],
        admits_override: small_prime,
        stretch: false,
        run: c5_4,
    },
    CheckDef {
        id: "C5.5",
        section: 5,
        kind: CheckKind::NonMembership,
        description: "the witness w is not in L(1); it is in R(2,p) and in L(2)",
        anchor: "L_1 != L_2",
        expectation: Expectation::Stated,
        expected: "NotMember in L(1); Member in R(2,3) and L(2)",
        primes: &[3],
        admits_override: never,
        stretch: false,
        run: c5_5,
    },
    CheckDef {
        id: "C5.6",
        section: 5,
        kind: CheckKind::Identity,
        description: "x -> x, y -> 1, others -> 0 kills every S_p(u_1, ..., u_p)",
        anchor: "alpha(S_p(u_1, ..., u_p)) = 0",
        expectation: Expectation::Stated,
        expected: "zero image for random monomial tuples",
        primes: &[3],
        admits_override: small_odd_prime,
        stretch: false,
        run: c5_6,
    },
];

pub fn catalog() -> &'static [CheckDef] {
    CATALOG
}

fn var(i: u32, p: Prime) -> Polynomial {
    Polynomial::var(i, p)
}

fn vars(range: std::ops::RangeInclusive<u32>, p: Prime) -> Vec<Polynomial> {
    range.map(|i| var(i, p)).collect()
}

/// All permutations of `items`, in lexicographic order of positions.
fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

fn c2_1a(run: &mut Run, primes: &[Prime]) -> Result<()> {
    run.param("d", "1..5");
    for &p in primes {
        for d in 1..=5u32 {
            let x = vars(1..=d + 1, p);
            let lhs = sym(&x)?;
            let mut rhs = Polynomial::zero(p);
            for i in 0..x.len() {
                let mut rest = x.clone();
                let xi = rest.remove(i);
                rhs = rhs + sym(&rest)? * xi;
            }
            run.identity(|| format!("p={p}, d={d}"), &lhs, &rhs);
        }
    }
    Ok(())
}

fn c2_1_insertions(run: &mut Run, primes: &[Prime], right: bool) -> Result<()> {
    run.param("d", "1..5");
    for &p in primes {
        for d in 1..=5u32 {
            let x = vars(1..=d + 1, p);
            let last = &x[d as usize];
            let head = &x[..d as usize];
            let lhs = sym(&x)?;
            let mut rhs = if right { sym(head)? * last } else { last * sym(head)? };
            for i in 0..head.len() {
                let mut args = head.to_vec();
                args[i] = if right { last * &head[i] } else { &head[i] * last };
                rhs = rhs + sym(&args)?;
            }
            run.identity(|| format!("p={p}, d={d}"), &lhs, &rhs);
        }
    }
    Ok(())
}

fn c2_1b(run: &mut Run, primes: &[Prime]) -> Result<()> {
    c2_1_insertions(run, primes, true)
}

fn c2_1c(run: &mut Run, primes: &[Prime]) -> Result<()> {
    c2_1_insertions(run, primes, false)
}

/// Monomials of degree 1 and 2 in `a` and `b`.
fn short_monomials(a: u32, b: u32) -> Vec<Word> {
    let mut out = vec![Word::letter(a), Word::letter(b)];
    for x in [a, b] {
        for y in [a, b] {
            out.push(Word::new([x, y]));
        }
    }
    out
}

fn c2_2(run: &mut Run, primes: &[Prime]) -> Result<()> {
    run.param("d", "2,3");
    run.param("u", "monomials of degree 1..2 in x1 and x_{d+1}");
    for &p in primes {
        for d in 2..=3u32 {
            let s = sym(&vars(1..=d, p))?;
            let fam = GeneratorFamily::r(1, d)?;
            for u in short_monomials(1, d + 1) {
                let target = commutator(&s, &Polynomial::monomial(u.clone(), 1, p))?;
                run.member(format!("[S_{d}(x1..x{d}), {u}] p={p}"), &target, &fam, Status::Member)?;
            }
        }
    }
    Ok(())
}

fn c2_3(run: &mut Run, primes: &[Prime]) -> Result<()> {
    run.param("d", "2,3");
    for &p in primes {
        for d in 2..=3u32 {
            let x = vars(1..=d + 1, p);
            let big = sym(&x)?;
            let small = sym(&x[..d as usize])?;
            let last = &x[d as usize];
            let fam = GeneratorFamily::r(1, d)?;
            run.member(
                format!("S_{}(x) - S_{d}(x) x{} p={p}", d + 1, d + 1),
                &(&big - &(&small * last)),
                &fam,
                Status::Member,
            )?;
            run.member(
                format!("S_{}(x) - x{} S_{d}(x) p={p}", d + 1, d + 1),
                &(&big - &(last * &small)),
                &fam,
                Status::Member,
            )?;
        }
    }
    Ok(())
}

fn c2_4(run: &mut Run, primes: &[Prime]) -> Result<()> {
    run.param("d", 2);
    for &p in primes {
        let s3 = sym(&vars(1..=3, p))?;
        let fam = GeneratorFamily::r(1, 2)?;
        run.member(format!("2 S_3(x1,x2,x3) p={p}"), &s3.scale_raw(2), &fam, Status::Member)?;
        run.member(format!("S_3(x1,x2,x3) p={p}"), &s3, &fam, Status::Member)?;
    }
    Ok(())
}

fn c2_5(run: &mut Run, primes: &[Prime]) -> Result<()> {
    run.param("d", 2);
    for &p in primes {
        let s2 = sym(&vars(1..=2, p))?;
        let x3 = var(3, p);
        let fam = GeneratorFamily::r(1, 2)?;
        run.member(format!("x3 S_2(x1,x2) p={p}"), &(&x3 * &s2), &fam, Status::Member)?;
        run.member(format!("S_2(x1,x2) x3 p={p}"), &(&s2 * &x3), &fam, Status::Member)?;
    }
    Ok(())
}

fn block_product(d: u32, p: Prime) -> Result<Polynomial> {
    let mut out = Polynomial::one(p);
    for b in 0..3 {
        out = out * sym(&vars(b * d + 1..=b * d + d, p))?;
    }
    Ok(out)
}

fn c2_6(run: &mut Run, primes: &[Prime]) -> Result<()> {
    run.param("d", 2);
    run.param("slice", "all-ones on x1..x6");
    for &p in primes {
        let target = block_product(2, p)?;
        run.member(
            "S_2(x1,x2) S_2(x3,x4) S_2(x5,x6)",
            &target,
            &GeneratorFamily::r(2, 2)?,
            Status::Member,
        )?;
    }
    Ok(())
}

fn c2_6_stretch(run: &mut Run, primes: &[Prime]) -> Result<()> {
    run.param("d", 3);
    run.param("slice", "all-ones on x1..x9");
    for &p in primes {
        let target = block_product(3, p)?;
        run.member(
            "S_3(x1,x2,x3) S_3(x4,x5,x6) S_3(x7,x8,x9)",
            &target,
            &GeneratorFamily::r(2, 3)?,
            Status::Member,
        )?;
    }
    Ok(())
}

fn c3_1a(run: &mut Run, primes: &[Prime]) -> Result<()> {
    run.param("z1", "x1");
    run.param("z2", "x2");
    run.param("u", 1);
    for &p in primes {
        let n = p.value() as usize;
        let lhs = subset_word_sum(2 * n, n, 1, 2, p)?;
        let z1p = Polynomial::var(1, p).pow(n as u32);
        let z2p = Polynomial::var(2, p).pow(n as u32);
        let mut rhs = &z1p * &z2p + &z2p * &z1p;
        for j in 1..n {
            rhs = rhs + subset_word_sum(n, j, 1, 2, p)? * subset_word_sum(n, n - j, 1, 2, p)?;
        }
        run.identity(|| format!("p={p}"), &lhs, &rhs);
    }
    Ok(())
}

fn c3_1b(run: &mut Run, primes: &[Prime]) -> Result<()> {
    run.param("z1", "x1");
    run.param("z2", "x2");
    for &p in primes {
        let n = p.value() as usize;
        let (z1, z2) = (var(1, p), var(2, p));
        for j in 1..n {
            let lhs = s_partial(&z1, &z2, j, p)?;
            let scale = p.factorial_mod(j as u64) * p.factorial_mod((n - j) as u64);
            let rhs = subset_word_sum(n, j, 1, 2, p)?.scale(scale);
            run.identity(|| format!("p={p}, j={j}"), &lhs, &rhs);
        }
        // the subset words themselves, for the record
        let all_z2 = x_subset_word(n, &[], 1, 2)?;
        run.equal(|| format!("p={p}, empty subset"), all_z2, Word::letter(2).pow(n));
    }
    Ok(())
}

fn c3_2(run: &mut Run, primes: &[Prime]) -> Result<()> {
    run.param("d", "2,3,4");
    for &p in primes {
        for d in 2..=4u32 {
            let x = vars(1..=d, p);
            run.identity(|| format!("p={p}, d={d}"), &linearize_inclusion_exclusion(&x)?, &sym(&x)?);
        }
    }
    Ok(())
}

fn c3_3(run: &mut Run, primes: &[Prime]) -> Result<()> {
    run.param("slices", "{x1:1, x2:2}; {x1:1, x2:1, x3:1}");
    for &p in primes {
        let d = p.value();
        let r = GeneratorFamily::r(1, d)?;
        let l = GeneratorFamily::l(1)?;
        for slice in [
            crate::freealg::MultiDegree::from_pairs([(1, 1), (2, d - 1)]),
            crate::freealg::MultiDegree::from_pairs((1..=d).map(|v| (v, 1))),
        ] {
            let (gens, complete) = family_generators(&r, &slice, p, run.budget.max_generators)?;
            if !complete {
                return Err(crate::Error::BudgetExceeded(format!("R(1,{d}) generators at {slice}")));
            }
            for (spec, g) in gens {
                run.member(format!("{spec} p={p}"), &g, &l, Status::Member)?;
            }
        }
    }
    Ok(())
}

fn c3_4(run: &mut Run, primes: &[Prime]) -> Result<()> {
    run.param("slice", "{x1:3, x2:3, x3:3}");
    for &p in primes {
        let n = p.value();
        let target = var(1, p).pow(n) * var(2, p).pow(n) * var(3, p).pow(n);
        run.member("x1^3 x2^3 x3^3", &target, &GeneratorFamily::l(2)?, Status::Member)?;
    }
    Ok(())
}

fn one_x_word(i: usize, n: usize, p: Prime) -> Result<Polynomial> {
    Ok(Polynomial::monomial(m_word(i, n, 1, 2)?, 1, p))
}

fn c4_1(run: &mut Run, primes: &[Prime]) -> Result<()> {
    run.param("n", "1..8");
    for &p in primes {
        let (x, y) = (var(1, p), var(2, p));
        for n in 1..=8usize {
            let lhs = left_normed_commutator(&x, &y, n)?;
            let mut rhs = Polynomial::zero(p);
            for i in 1..=n + 1 {
                let c = p.binomial_mod(n as u64, (i - 1) as u64);
                let c = if i % 2 == 0 { -c } else { c };
                rhs = rhs + one_x_word(i, n, p)?.scale(c);
            }
            run.identity(|| format!("p={p}, n={n}"), &lhs, &rhs);
        }
    }
    Ok(())
}

fn c4_2(run: &mut Run, primes: &[Prime]) -> Result<()> {
    run.param("i", "0..p-1");
    for &p in primes {
        for i in 0..p.value() as u64 {
            let want = if i % 2 == 0 { p.one() } else { -p.one() };
            run.equal(|| format!("p={p}, i={i}"), p.binomial_mod(p.value() as u64 - 1, i), want);
        }
    }
    Ok(())
}

fn c4_3(run: &mut Run, primes: &[Prime]) -> Result<()> {
    for &p in primes {
        let n = p.value() as usize;
        let lhs = left_normed_commutator(&var(1, p), &var(2, p), n - 1)?;
        let mut signed = Polynomial::zero(p);
        let mut plain = Polynomial::zero(p);
        for i in 1..=n {
            let c = p.binomial_mod(n as u64 - 1, (i - 1) as u64);
            let c = if i % 2 == 0 { -c } else { c };
            let m = one_x_word(i, n - 1, p)?;
            signed = signed + m.scale(c);
            plain = plain + m;
        }
        run.identity(|| format!("p={p}, signed form"), &lhs, &signed);
        run.identity(|| format!("p={p}, plain sum"), &lhs, &plain);
    }
    Ok(())
}

fn c4_4(run: &mut Run, primes: &[Prime]) -> Result<()> {
    for &p in primes {
        let n = p.value() as usize;
        let (x, y) = (var(1, p), var(2, p));
        let lhs = s_partial(&x, &y, 1, p)?;
        let rhs = -left_normed_commutator(&x, &y, n - 1)?;
        run.identity(|| format!("p={p}"), &lhs, &rhs);
    }
    Ok(())
}

fn c4_5(run: &mut Run, primes: &[Prime]) -> Result<()> {
    for &p in primes {
        let n = p.value();
        let x = vars(1..=n, p);
        let lhs = sym(&x)?;
        let mut rhs = Polynomial::zero(p);
        for perm in permutations(&x[1..]) {
            let mut args = vec![x[0].clone()];
            args.extend(perm);
            rhs = rhs + left_normed_commutator_of(&args)?;
        }
        run.identity(|| format!("p={p}"), &lhs, &rhs);
    }
    Ok(())
}

fn c4_6(run: &mut Run, primes: &[Prime]) -> Result<()> {
    run.param("slices", "{x1:1, x2:p-1}; all-ones on x1..xp");
    for &p in primes {
        let n = p.value();
        let c = left_normed_commutator(&var(1, p), &var(2, p), n as usize - 1)?;
        run.member(format!("[x1, x2 x {}] in R(1,{n})", n - 1), &c, &GeneratorFamily::r(1, n)?, Status::Member)?;
        let s = sym(&vars(1..=n, p))?;
        run.member(
            format!("S_{n}(x1..x{n}) in T[[x1, x2 x {}]]", n - 1),
            &s,
            &GeneratorFamily::tspace_of(vec![c])?,
            Status::Member,
        )?;
    }
    Ok(())
}

/// A random arrangement of `p` letters x1 and `p` letters x2, cut into `p`
/// nonempty pieces.
fn random_tuple(rng: &mut impl Rng, p: usize) -> Vec<Word> {
    let mut letters: Vec<u32> = std::iter::repeat_n(1, p).chain(std::iter::repeat_n(2, p)).collect();
    letters.shuffle(rng);
    let mut cuts: Vec<usize> = (1..2 * p).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts[..p - 1].to_vec();
    cuts.sort_unstable();
    let mut bounds = vec![0];
    bounds.extend(cuts);
    bounds.push(2 * p);
    bounds.windows(2).map(|b| Word::new(letters[b[0]..b[1]].iter().copied())).collect()
}

fn c5_1(run: &mut Run, primes: &[Prime]) -> Result<()> {
    const SAMPLES: usize = 200;
    run.param("samples", SAMPLES);
    run.param("alphabet", "x1, x2");
    let mut rng = run.rng();
    for &p in primes {
        let n = p.value() as usize;
        let xy = Word::new([1, 2]).pow(n);
        let yx = Word::new([2, 1]).pow(n);
        for k in 0..SAMPLES {
            let tuple = random_tuple(&mut rng, n);
            let args: Vec<Polynomial> = tuple.iter().map(|w| Polynomial::monomial(w.clone(), 1, p)).collect();
            let s = sym(&args)?;
            let total = s.coeff(&xy) + s.coeff(&yx);
            run.equal(
                || {
                    let shown: Vec<String> = tuple.iter().map(Word::to_string).collect();
                    format!("p={p}, sample {k}: ({})", shown.join(", "))
                },
                total,
                p.zero(),
            );
        }
    }
    Ok(())
}

fn c5_2(run: &mut Run, primes: &[Prime]) -> Result<()> {
    run.param("slice", "{x1:3, x2:3}");
    for &p in primes {
        let n = p.value();
        let w = witness_w(p, 1, 2)?;
        run.member("w", &w, &GeneratorFamily::r(1, n)?, Status::NotMember)?;
        run.member("w", &w, &GeneratorFamily::r(2, n)?, Status::Member)?;
    }
    Ok(())
}

fn c5_3(run: &mut Run, primes: &[Prime]) -> Result<()> {
    run.param("slice", "{x1:3, x2:3}");
    for &p in primes {
        let n = p.value();
        let target = Polynomial::monomial(Word::new([1, 2]).pow(n as usize), 1, p);
        run.member("(x1 x2)^3", &target, &GeneratorFamily::r(1, n)?, Status::NotMember)?;
        run.member("(x1 x2)^3", &target, &GeneratorFamily::l(1)?, Status::Member)?;
    }
    Ok(())
}

/// A random binomial `a m1 + b m2` in x1, x2 with nonzero coefficients and
/// monomials of degree 1..2.
fn random_binomial(rng: &mut impl Rng, p: Prime) -> Polynomial {
    let mut word = || {
        let len = rng.random_range(1..=2);
        Word::new((0..len).map(|_| rng.random_range(1..=2u32)))
    };
    let first = word();
    let mut second = word();
    while second == first {
        second = word();
    }
    let mut f = Polynomial::zero(p);
    f.add_term(first, rng.random_range(1..p.value()));
    f.add_term(second, rng.random_range(1..p.value()));
    f
}

fn c5_4(run: &mut Run, primes: &[Prime]) -> Result<()> {
    const SAMPLES: usize = 5;
    run.param("random binomial pairs", SAMPLES);
    let mut rng = run.rng();
    for &p in primes {
        let (x, y) = (var(1, p), var(2, p));
        run.identity(|| format!("p={p}, u=x1, v=x2"), &frobenius_expand(&x, &y)?, &(&x + &y).pow(p.value()));
        for k in 0..SAMPLES {
            let u = random_binomial(&mut rng, p);
            let v = random_binomial(&mut rng, p);
            run.identity(
                || format!("p={p}, sample {k}: u={u}, v={v}"),
                &frobenius_expand(&u, &v)?,
                &(&u + &v).pow(p.value()),
            );
        }
    }
    Ok(())
}

fn c5_5(run: &mut Run, primes: &[Prime]) -> Result<()> {
    run.param("slice", "{x1:3, x2:3}");
    for &p in primes {
        let n = p.value();
        let w = witness_w(p, 1, 2)?;
        run.member("w", &w, &GeneratorFamily::l(1)?, Status::NotMember)?;
        run.member("w", &w, &GeneratorFamily::r(2, n)?, Status::Member)?;
        run.member("w", &w, &GeneratorFamily::l(2)?, Status::Member)?;
    }
    Ok(())
}

fn c5_6(run: &mut Run, primes: &[Prime]) -> Result<()> {
    const SAMPLES: usize = 50;
    run.param("samples", SAMPLES);
    run.param("alpha", "x1 -> x1, x2 -> 1, x3 -> 0");
    let mut rng = run.rng();
    for &p in primes {
        let n = p.value() as usize;
        for k in 0..SAMPLES {
            let args: Vec<Polynomial> = (0..n)
                .map(|_| {
                    let len = rng.random_range(1..=3);
                    let w = Word::new((0..len).map(|_| rng.random_range(1..=3u32)));
                    Polynomial::monomial(w, 1, p)
                })
                .collect();
            let s = sym(&args)?;
            let image = s.substitute(&collapse_homomorphism(&s, 1, 2))?;
            run.identity(
                || {
                    let shown: Vec<String> = args.iter().map(Polynomial::to_string).collect();
                    format!("p={p}, sample {k}: ({})", shown.join(", "))
                },
                &image,
                &Polynomial::zero(p),
            );
        }
    }
    Ok(())
}
