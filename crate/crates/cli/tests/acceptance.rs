//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::Command;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;

use sh3_core::algebra::{m, mpoly_times, reorder_oracle, Element, Monomial};
use sh3_core::cyclotomic::CycNum;
use sh3_core::dunkl::{abstract_embedding_report, exchange_relations, hamiltonian_report};
use sh3_core::group::{perm_to_lq, GroupBasisElem, Perm};
use sh3_core::mpoly::MPolynomial;
use sh3_core::par::Exec;
use sh3_core::random::{random_coefficient, random_element, rng};
use sh3_core::rational::Rational;
use sh3_core::structure::{
    center_basis, commutant_slice, cube_contraction, form_independence_on_commutant, replay_certificate,
    shift_polynomial, simplicity_certificate, SimplicityCertificate,
};
use sh3_core::supertrace::{gram_up_to_degree, str_constraint_oracle, str_eval, GramParams, StrValue};
use sh3_core::verify::{core_suite, sl2_suite};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn relation_suite() -> Check {
    let core = core_suite(6, Exec::default());
    ensure(core.passed, format!("core suite failures: {:?}", core.failures()))?;
    let sl2 = sl2_suite();
    ensure(sl2.passed, format!("sl2 suite failures: {:?}", sl2.failures()))?;
    let status = Command::new(env!("CARGO_BIN_EXE_sh3"))
        .args(["verify", "--suite", "all"])
        .output()
        .map_err(|e| e.to_string())?
        .status;
    ensure(status.code() == Some(0), format!("`sh3 verify --suite all` exited with {status}"))?;
    Ok(format!("{} core + {} sl2 relations, CLI exit 0", core.checks.len(), sl2.checks.len()))
}

fn normal_ordering() -> Check {
    let mut g = rng(2024);
    let pairs: Vec<(Element, Element)> = (0..1000)
        .map(|_| {
            let (da, db) = (g.gen_range(0..=8), g.gen_range(0..=8));
            (random_element(&mut g, da, 3), random_element(&mut g, db, 3))
        })
        .collect();
    let ok = Exec::default().map(&pairs, |(a, b)| a.mul(b) == reorder_oracle(a, b));
    let bad = ok.iter().filter(|v| !**v).count();
    ensure(bad == 0, format!("{bad} of 1000 products disagree"))?;
    Ok("1000 random pairs of degree <= 8 agree".into())
}

fn supertrace_dimension() -> Check {
    let mut dims = Vec::new();
    for cap in [2, 4] {
        let r = str_constraint_oracle(cap, false, Exec::default()).map_err(|e| e.to_string())?;
        ensure(r.kernel_dim == 2, format!("kernel dimension {} at cap {cap}", r.kernel_dim))?;
        ensure(r.agrees(), format!("oracle and evaluator disagree at cap {cap}: {:?}", r.mismatches))?;
        dims.push(r.kernel_dim);
    }
    Ok(format!("kernel dimensions {dims:?} at caps [2, 4], functional matches the evaluator"))
}

fn homogeneous(g: &mut impl Rng, parity: u32, pool: &[Monomial]) -> Element {
    let same: Vec<&Monomial> = pool.iter().filter(|m| m.degree() % 2 == parity).collect();
    (0..3).fold(Element::zero(), |acc, _| {
        acc + Element::monomial(**same.choose(g).unwrap()).scale(&random_coefficient(g))
    })
}

fn supertrace_anchors() -> Check {
    let s = |f: &Element| str_eval(f).map_err(|e| e.to_string());
    ensure(s(&Element::unit())? == StrValue::frac((-1, 6), (1, 4)), "str(1)")?;
    ensure(s(&Element::group(GroupBasisElem::q(1)))? == StrValue::frac((1, 6), (1, 4)), "str(Q1)")?;
    for i in 0..3 {
        ensure(s(&Element::group(GroupBasisElem::l(i)))?.is_zero(), format!("str(L{i})"))?;
    }
    ensure(s(&Element::from_group_algebra(&perm_to_lq(Perm::K12)))?.is_zero(), "str(K12)")?;
    let pool = Monomial::up_to_degree(4);
    let mut g = rng(77);
    for k in 0..500 {
        let (pf, pg) = (g.gen_range(0..2), g.gen_range(0..2));
        let (f, h) = (homogeneous(&mut g, pf, &pool), homogeneous(&mut g, pg, &pool));
        let sign = if pf * pg == 1 { -1 } else { 1 };
        let lhs = s(&f.mul(&h))?;
        let rhs = s(&h.mul(&f))?.scale(&CycNum::from_int(sign));
        ensure(lhs == rhs, format!("supersymmetry fails on pair {k}"))?;
    }
    Ok("str(1), str(Q1), str(Li) = str(K12) = 0, supersymmetry on 500 pairs".into())
}

fn singlet_shift() -> Check {
    let p = shift_polynomial();
    let shift = Rational::new(9, 2);
    for n in 0..3 {
        let phi = MPolynomial::power(n);
        for i in 0..3 {
            let e = GroupBasisElem::q(i);
            let lhs = cube_contraction(&mpoly_times(&phi, e));
            let rhs = mpoly_times(&p.mul(&phi.shift(&shift)), e);
            ensure(lhs == rhs, format!("phi = m^{n}, Q{i}: got {lhs}"))?;
        }
    }
    // the same statement with φ(m)Qᵢ built from explicit products of m
    let explicit = cube_contraction(&m().mul(&m()).mul(&Element::group(GroupBasisElem::q(2))));
    let expected = mpoly_times(&p.mul(&MPolynomial::power(2).shift(&shift)), GroupBasisElem::q(2));
    ensure(explicit == expected, "explicit m*m*Q2 case")?;
    Ok(format!("nine cases with constant {}", p.leading()))
}

fn structure() -> Check {
    let center = center_basis(6, Exec::default());
    ensure(center == vec![Element::unit()], format!("center basis {center:?}"))?;
    for cap in 2..=5 {
        let s = commutant_slice(cap, cap + 4, Exec::default());
        ensure(s.codimension == 2, format!("codimension {} at cap {cap}", s.codimension))?;
        ensure(s.stabilized, format!("not stabilized at cap {cap}"))?;
        ensure(s.degree_one_in_span, format!("degree-1 slice missing at cap {cap}"))?;
        ensure(!s.unit_in_span, format!("unit in the span at cap {cap}"))?;
    }
    Ok("center = {1} at degree 6; codimension 2 at caps 2..=5".into())
}

fn form_independence() -> Check {
    let r = form_independence_on_commutant().map_err(|e| e.to_string())?;
    ensure(!r.determinant.is_zero() && r.only_trivial_solution, "dependent forms")?;
    Ok(format!("values {} and {}, determinant {}", r.first, r.second, r.determinant))
}

fn gram_rank() -> Check {
    let mut sizes = Vec::new();
    for (a, b) in [(1, 0), (0, 1), (1, 1)] {
        let params = GramParams::Numeric(CycNum::from_int(a), CycNum::from_int(b));
        let r = gram_up_to_degree(2, &params, Exec::default()).map_err(|e| e.to_string())?;
        ensure(r.nullity == 0, format!("rank {} of {} at ({a},{b})", r.rank, r.size))?;
        sizes.push(r.size);
    }
    Ok(format!("full rank {} at (1,0), (0,1), (1,1)", sizes[0]))
}

fn certify(seed: &Element, rng_seed: u64) -> Result<(), String> {
    let cert = simplicity_certificate(seed, rng_seed).map_err(|e| format!("{seed}: {e}"))?;
    ensure(cert.final_element == Element::unit(), format!("{seed}: final element {}", cert.final_element))?;
    let json = serde_json::to_string(&cert).map_err(|e| e.to_string())?;
    let back: SimplicityCertificate = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    let replay = replay_certificate(&back).map_err(|e| format!("{seed}: replay {e}"))?;
    ensure(replay.final_is_unit, format!("{seed}: replay does not end at the unit"))
}

fn certificates() -> Check {
    let q0 = Element::group(GroupBasisElem::q(0));
    let designed = [q0.clone(), m().mul(&q0), Element::x().mul(&Element::group(GroupBasisElem::l(1)))];
    for seed in &designed {
        certify(seed, 0)?;
    }
    for k in 0..20u64 {
        let degree = 1 + (k % 3) as u32;
        let seed = random_element(&mut rng(1000 + k), degree, 3);
        certify(&seed, k)?;
    }
    Ok("Q0, m*Q0, x*L1 and 20 random seeds reach the unit and replay".into())
}

fn dunkl() -> Check {
    let nus = [Rational::from_int(0), Rational::new(1, 3), Rational::new(1, 2), Rational::from_int(1)];
    let mut count = 0;
    for nu in &nus {
        for r in [exchange_relations(nu, 5, Exec::default()), hamiltonian_report(nu, 5, Exec::default())] {
            let r = r.map_err(|e| e.to_string())?;
            let bad: Vec<_> = r.relations.iter().filter(|c| !c.passed).map(|c| c.relation.clone()).collect();
            ensure(r.passed, format!("{} at nu = {nu}: {bad:?}", r.check))?;
            count += r.relations.len();
        }
    }
    let e = abstract_embedding_report(5, Exec::default()).map_err(|e| e.to_string())?;
    ensure(e.passed, "embedding relations fail")?;
    Ok(format!("{count} exchange and Hamiltonian relations, {} embedded relations", e.relations.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("relation suite", relation_suite),
        ("normal-ordering cross-check", normal_ordering),
        ("supertrace dimension", supertrace_dimension),
        ("supertrace anchors", supertrace_anchors),
        ("singlet-shift identity", singlet_shift),
        ("center and commutant", structure),
        ("form independence", form_independence),
        ("Gram non-degeneracy", gram_rank),
        ("simplicity certificates", certificates),
        ("Dunkl realization", dunkl),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = check();
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.1}s)", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
