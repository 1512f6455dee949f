use std::fmt::Display;
use std::str::FromStr;

use anyhow::{bail, Context};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde_json::{json, Number, Value};

use sphalg::bipartite::{bipartition_count, enumerate_bipartitions, gg_form};
use sphalg::combinat::{bell, binomial};
use sphalg::diagram::{rank_at, spherical_basis};
use sphalg::partition::{enumerate_partitions, kostka, phi, std_count};
use sphalg::rep::{
    aitken_coefficient, build_poset, cell_dim, decomposition_report, g_dim, par_sph, sph_cell_dim, PosetKind,
};
use sphalg::schur_weyl::{centralizer_dim, perm_decomposition};

pub const ENUMERATION_BOUND: usize = 8;
pub const RANK_BOUND: usize = 5;

/// A computed payload with the identities it was checked against.
pub struct Outcome {
    pub payload: Value,
    pub provenance: Vec<String>,
}

/// A big integer as a bare JSON number.
pub fn num(v: impl Display) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integers are valid JSON numbers"))
}

pub fn to_value(v: impl serde::Serialize) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

pub fn rational_string(t: &BigRational) -> String {
    format!("{}/{}", t.numer(), t.denom())
}

/// Parses `p/q` or an integer exactly; `2k+1` when absent.
pub fn parse_t(k: usize, t: Option<&str>) -> anyhow::Result<BigRational> {
    match t {
        None => Ok(BigRational::from_integer(BigInt::from(2 * k + 1))),
        Some(s) => {
            let (p, q) = s.trim().split_once('/').unwrap_or((s.trim(), "1"));
            let p = BigInt::from_str(p.trim()).with_context(|| format!("invalid numerator in t = {s:?}"))?;
            let q = BigInt::from_str(q.trim()).with_context(|| format!("invalid denominator in t = {s:?}"))?;
            if q == BigInt::from(0) {
                bail!("t = {s:?} has a zero denominator");
            }
            Ok(BigRational::new(p, q))
        }
    }
}

pub fn check_bound(what: &str, value: usize, bound: usize, allow_long: bool) -> anyhow::Result<()> {
    if value > bound && !allow_long {
        bail!("{what} = {value} exceeds the default bound {bound}; pass --allow-long to run it anyway");
    }
    Ok(())
}

fn kind(spherical: bool) -> PosetKind {
    if spherical {
        PosetKind::Spherical
    } else {
        PosetKind::Full
    }
}

pub fn bipar(k: usize, count_only: bool, gg: bool, allow_long: bool) -> anyhow::Result<Outcome> {
    if count_only {
        let count = bipartition_count(k);
        let mut provenance = vec!["bp_k from the generating function".to_string()];
        let mut passed = true;
        if k <= ENUMERATION_BOUND {
            passed = BigUint::from(enumerate_bipartitions(k).len()) == count;
            provenance.push("matches the enumeration".into());
        }
        return Ok(Outcome { payload: json!({ "k": k, "count": num(count), "passed": passed }), provenance });
    }
    check_bound("k", k, ENUMERATION_BOUND, allow_long)?;
    let all = enumerate_bipartitions(k);
    let mut payload = json!({ "k": k, "count": all.len(), "bipartitions": to_value(&all) });
    let mut provenance = vec!["count matches the generating function".to_string()];
    let passed = BigUint::from(all.len()) == bipartition_count(k);
    if gg {
        payload["gg"] = Value::Array(all.iter().map(|b| to_value(gg_form(b))).collect());
        provenance.push("each Garsia-Gessel form rebuilds its bipartite partition".into());
    }
    payload["passed"] = json!(passed && all.iter().all(|b| gg_form(b).to_bipartition().as_ref() == Ok(b)));
    Ok(Outcome { payload, provenance })
}

pub fn dims(k: usize, n: Option<usize>, spherical: bool, allow_long: bool) -> anyhow::Result<Outcome> {
    check_bound("k", k, ENUMERATION_BOUND, allow_long)?;
    if let Some(n) = n {
        return kostka_table(k, n);
    }
    let poset = build_poset(k, kind(spherical));
    let dims = poset
        .elements()
        .iter()
        .map(|l| if spherical { sph_cell_dim(k, l) } else { cell_dim(k, l) })
        .collect::<Result<Vec<_>, _>>()?;
    let square_sum: BigUint = dims.iter().map(|d| d * d).sum();
    let (expected, identity) = if spherical {
        (bipartition_count(k), "sum of squares equals bp_k")
    } else {
        (bell(2 * k), "sum of squares equals Bell(2k)")
    };
    let payload = json!({
        "k": k,
        "poset": to_value(poset.kind),
        "labels": to_value(poset.elements()),
        "dims": dims.iter().map(num).collect::<Vec<_>>(),
        "square_sum": num(&square_sum),
        "expected_square_sum": num(&expected),
        "passed": square_sum == expected,
    });
    Ok(Outcome { payload, provenance: vec![identity.into()] })
}

/// Kostka numbers `K_{λ,Φ(ν)}` for `λ ∈ Par_sph^{k,n}` with the Specht and
/// multiplicity-space dimensions.
fn kostka_table(k: usize, n: usize) -> anyhow::Result<Outcome> {
    if n == 0 {
        bail!("n must be positive");
    }
    let weights = enumerate_partitions(k, Some(n)).iter().map(|nu| phi(nu, n)).collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::new();
    let mut square_sum = BigUint::from(0u32);
    let mut pairing_sum = BigUint::from(0u32);
    for lambda in par_sph(k, n) {
        let entries = weights.iter().map(|w| kostka(&lambda, &w.to_composition())).collect::<Result<Vec<_>, _>>()?;
        let g = g_dim(k, n, &lambda)?;
        let s = std_count(&lambda);
        square_sum += &g * &g;
        pairing_sum += &s * &g;
        rows.push(json!({
            "lambda": to_value(&lambda),
            "kostka": entries.iter().map(num).collect::<Vec<_>>(),
            "specht_dim": num(&s),
            "g_dim": num(&g),
        }));
    }
    let centralizer = centralizer_dim(k, n);
    let symmetric = binomial(k + n - 1, k);
    let passed = square_sum == centralizer && pairing_sum == symmetric;
    let payload = json!({
        "k": k,
        "n": n,
        "weights": to_value(&weights),
        "rows": rows,
        "square_sum": num(&square_sum),
        "centralizer_dim": num(&centralizer),
        "pairing_sum": num(&pairing_sum),
        "symmetric_power_dim": num(&symmetric),
        "passed": passed,
    });
    let provenance = vec![
        "sum of g_dim squared equals the centralizer dimension".into(),
        "sum of specht_dim times g_dim equals dim S^k V_n".into(),
    ];
    Ok(Outcome { payload, provenance })
}

pub fn decomp(k: usize, n: i64, spherical: bool, allow_long: bool) -> anyhow::Result<Outcome> {
    check_bound("k", k, ENUMERATION_BOUND, allow_long)?;
    if n == 0 {
        bail!("n = 0 is excluded: the decomposition theory used here needs t != 0");
    }
    let report = decomposition_report(k, n, kind(spherical))?;
    let provenance = vec![
        "simple dimensions are alternating sums of cell dimensions along each block".into(),
        format!("identity matrix expected exactly when n lies outside 1..={}", 2 * k as i64 - 2),
    ];
    Ok(Outcome { payload: to_value(&report), provenance })
}

pub fn rank(k: usize, t: &BigRational, allow_long: bool) -> anyhow::Result<Outcome> {
    if k == 0 {
        bail!("k must be positive");
    }
    check_bound("k", k, RANK_BOUND, allow_long)?;
    let basis = spherical_basis(k)?;
    let rank = rank_at(&basis, t)?;
    let bp = bipartition_count(k);
    let payload = json!({
        "k": k,
        "t": rational_string(t),
        "basis_size": basis.len(),
        "rank": rank,
        "bp": num(&bp),
        "full_rank": BigUint::from(rank) == bp,
    });
    Ok(Outcome { payload, provenance: vec!["exact rational elimination".into()] })
}

pub fn schur_weyl(k: usize, n: usize, allow_long: bool) -> anyhow::Result<Outcome> {
    check_bound("k", k, ENUMERATION_BOUND, allow_long)?;
    if n == 0 {
        bail!("n must be positive");
    }
    let summands = perm_decomposition(k, n)?;
    let symmetric = binomial(k + n - 1, k);
    let total: BigUint = summands.iter().map(|(_, d)| d).sum();
    let mut multiplicities = Vec::new();
    let mut square_sum = BigUint::from(0u32);
    let mut agree = true;
    for lambda in par_sph(k, n) {
        let g = g_dim(k, n, &lambda)?;
        let aitken = aitken_coefficient(&lambda, k);
        agree &= aitken == g;
        square_sum += &g * &g;
        multiplicities.push(json!({ "lambda": to_value(&lambda), "g_dim": num(&g), "aitken": num(&aitken) }));
    }
    let centralizer = centralizer_dim(k, n);
    let payload = json!({
        "k": k,
        "n": n,
        "symmetric_power_dim": num(&symmetric),
        "summands": summands
            .iter()
            .map(|(alpha, dim)| json!({ "alpha": to_value(alpha), "dim": num(dim) }))
            .collect::<Vec<_>>(),
        "multiplicities": multiplicities,
        "centralizer_dim": num(&centralizer),
        "square_sum": num(&square_sum),
        "passed": agree && total == symmetric && square_sum == centralizer,
    });
    let provenance = vec![
        "permutation module dimensions sum to dim S^k V_n".into(),
        "Kostka sums agree with the Aitken coefficients".into(),
        "sum of g_dim squared equals the orbit count".into(),
    ];
    Ok(Outcome { payload, provenance })
}
