use clap::ValueEnum;
use num_bigint::BigUint;
use num_rational::BigRational;
use serde_json::{json, Value};

use sphalg::bipartite::{bipartition_count, count_matrices, enumerate_bipartitions};
use sphalg::combinat::bell;
use sphalg::diagram::{pairing_coefficient, rank_at, spherical_basis};
use sphalg::partition::{b_stat, enumerate_partitions, kostka, phi, psi};
use sphalg::rep::{
    aitken_coefficient, build_poset, cell_dim, conjecture_check, g_dim, par_sph, sph_cell_dim, PosetKind,
};
use sphalg::schur_weyl::centralizer_dim;
use sphalg::Partition;

use crate::commands::{check_bound, Outcome, ENUMERATION_BOUND, RANK_BOUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    BpIdentity,
    Rank,
    AitkenKostka,
    Centralizer,
    Conjecture,
    Rsk,
    Pairing,
    All,
}

const SUITES: [Suite; 7] = [
    Suite::BpIdentity,
    Suite::Rank,
    Suite::AitkenKostka,
    Suite::Centralizer,
    Suite::Conjecture,
    Suite::Rsk,
    Suite::Pairing,
];

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::BpIdentity => "bp-identity",
            Suite::Rank => "rank",
            Suite::AitkenKostka => "aitken-kostka",
            Suite::Centralizer => "centralizer",
            Suite::Conjecture => "conjecture",
            Suite::Rsk => "rsk",
            Suite::Pairing => "pairing",
            Suite::All => "all",
        }
    }

    /// (default max-k, largest max-k without --allow-long)
    fn bounds(self) -> (usize, usize) {
        match self {
            Suite::BpIdentity => (8, 12),
            Suite::Rank => (4, RANK_BOUND),
            Suite::AitkenKostka => (7, ENUMERATION_BOUND),
            Suite::Centralizer => (5, ENUMERATION_BOUND),
            Suite::Conjecture => (8, ENUMERATION_BOUND),
            Suite::Rsk => (6, ENUMERATION_BOUND),
            Suite::Pairing => (4, 4),
            Suite::All => (0, 0),
        }
    }

    fn provenance(self) -> &'static str {
        match self {
            Suite::BpIdentity => "spherical cell dimensions square-sum to bp_k; full ones to Bell(2k)",
            Suite::Rank => "the spherical diagram basis is independent at t = 2k+1",
            Suite::AitkenKostka => "Aitken coefficients equal Kostka sums and vanish exactly below b(λ)",
            Suite::Centralizer => "orbit counts equal square sums of g_dim and stabilize at n = 2k",
            Suite::Conjecture => "dim G_k(λ) equals the simple dimension at the restricted label",
            Suite::Rsk => "Kostka inner products count contingency tables",
            Suite::Pairing => "the pairing coefficient is positive at t = 1..2k-2",
            Suite::All => "",
        }
    }
}

struct Check {
    name: &'static str,
    k: usize,
    n: Option<usize>,
    pass: bool,
    detail: String,
}

impl Check {
    fn new(name: &'static str, k: usize, n: Option<usize>, pass: bool, detail: String) -> Check {
        Check { name, k, n, pass, detail }
    }

    fn to_json(&self) -> Value {
        json!({ "check": self.name, "k": self.k, "n": self.n, "pass": self.pass, "detail": self.detail })
    }
}

pub fn run(suite: Suite, max_k: Option<usize>, max_n: Option<usize>, allow_long: bool) -> anyhow::Result<Outcome> {
    let plan: Vec<(Suite, usize)> = if suite == Suite::All {
        // an explicit max-k caps every suite at its own default
        SUITES.iter().map(|&s| (s, max_k.map_or(s.bounds().0, |m| m.min(s.bounds().0)))).collect()
    } else {
        let (default, bound) = suite.bounds();
        let k = max_k.unwrap_or(default);
        check_bound("max-k", k, bound, allow_long)?;
        vec![(suite, k)]
    };
    let mut checks = Vec::new();
    for &(s, k) in &plan {
        checks.extend(match s {
            Suite::BpIdentity => bp_identity(k),
            Suite::Rank => rank(k)?,
            Suite::AitkenKostka => aitken_kostka(k, max_n.unwrap_or(7))?,
            Suite::Centralizer => centralizer(k, max_n)?,
            Suite::Conjecture => conjecture(k, max_n)?,
            Suite::Rsk => rsk(k)?,
            Suite::Pairing => pairing(k)?,
            Suite::All => unreachable!("expanded above"),
        });
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    let payload = json!({
        "suite": suite.name(),
        "max_k": plan.iter().map(|p| p.1).max(),
        "max_n": max_n,
        "checks": checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        "total": checks.len(),
        "failed": failed,
        "passed": failed == 0,
    });
    let provenance = plan.iter().map(|(s, _)| s.provenance().to_string()).collect();
    Ok(Outcome { payload, provenance })
}

fn bp_identity(max_k: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for k in 0..=max_k {
        let full = build_poset(k, PosetKind::Full);
        let sph: BigUint = full.elements().iter().map(|l| sph_cell_dim(k, l).expect("label in poset").pow(2)).sum();
        let bp = bipartition_count(k);
        let mut pass = sph == bp;
        let mut detail = format!("sum = {sph}, bp_k = {bp}");
        if k <= ENUMERATION_BOUND {
            let listed = enumerate_bipartitions(k).len();
            pass &= BigUint::from(listed) == bp;
            detail.push_str(&format!(", enumerated {listed}"));
        }
        checks.push(Check::new("spherical-square-sum", k, None, pass, detail));
        let cells: BigUint = full.elements().iter().map(|l| cell_dim(k, l).expect("label in poset").pow(2)).sum();
        let target = bell(2 * k);
        checks.push(Check::new(
            "full-square-sum",
            k,
            None,
            cells == target,
            format!("sum = {cells}, Bell(2k) = {target}"),
        ));
    }
    checks
}

fn rank(max_k: usize) -> anyhow::Result<Vec<Check>> {
    let mut checks = Vec::new();
    for k in 1..=max_k {
        let basis = spherical_basis(k)?;
        let t = BigRational::from_integer((2 * k + 1).into());
        let rank = rank_at(&basis, &t)?;
        let bp = bipartition_count(k);
        checks.push(Check::new(
            "spherical-rank",
            k,
            None,
            BigUint::from(rank) == bp,
            format!("rank {rank}, bp_k {bp}"),
        ));
    }
    Ok(checks)
}

fn aitken_kostka(max_k: usize, max_n: usize) -> anyhow::Result<Vec<Check>> {
    let mut checks = Vec::new();
    for k in 0..=max_k {
        for n in 1..=max_n {
            let mut mismatches = Vec::new();
            let shapes = enumerate_partitions(n, None);
            for lambda in &shapes {
                let mut sum = BigUint::from(0u32);
                for nu in enumerate_partitions(k, Some(n)) {
                    sum += kostka(lambda, &phi(&nu, n)?.to_composition())?;
                }
                let aitken = aitken_coefficient(lambda, k);
                if aitken != sum || (aitken == BigUint::from(0u32)) != (k < b_stat(lambda)) {
                    mismatches.push(format!("{lambda}: {aitken} vs {sum}"));
                }
            }
            let detail = summary(shapes.len(), &mismatches);
            checks.push(Check::new("aitken-kostka", k, Some(n), mismatches.is_empty(), detail));
        }
    }
    Ok(checks)
}

fn centralizer(max_k: usize, max_n: Option<usize>) -> anyhow::Result<Vec<Check>> {
    let mut checks = Vec::new();
    for k in 1..=max_k {
        let bp = bipartition_count(k);
        for n in 1..=max_n.unwrap_or(2 * k + 2) {
            let orbits = centralizer_dim(k, n);
            let squares = par_sph(k, n).iter().map(|l| g_dim(k, n, l).map(|g| g.pow(2))).sum::<Result<BigUint, _>>()?;
            let mut pass = orbits == squares;
            let mut detail = format!("orbits {orbits}, squares {squares}");
            if n >= 2 * k {
                pass &= orbits == bp;
                detail.push_str(&format!(", bp_k {bp}"));
            }
            checks.push(Check::new("centralizer", k, Some(n), pass, detail));
        }
    }
    Ok(checks)
}

fn conjecture(max_k: usize, max_n: Option<usize>) -> anyhow::Result<Vec<Check>> {
    let mut checks = Vec::new();
    for k in 1..=max_k {
        for n in 1..=max_n.map_or(2 * k, |m| m.min(2 * k)) {
            let rows = conjecture_check(k, n)?;
            let mismatches: Vec<String> = rows
                .iter()
                .filter(|r| !r.equal)
                .map(|r| format!("{}: G {} vs L({}) {}", r.lambda, r.g_dim, r.lambda_bar, r.simple_dim))
                .collect();
            checks.push(Check::new("conjecture", k, Some(n), mismatches.is_empty(), summary(rows.len(), &mismatches)));
        }
    }
    Ok(checks)
}

fn rsk(max_size: usize) -> anyhow::Result<Vec<Check>> {
    let shapes: Vec<Partition> = (1..=max_size).flat_map(|n| enumerate_partitions(n, None)).collect();
    let mut checks = Vec::new();
    for l in 1..=max_size {
        let mut mismatches = Vec::new();
        let mut pairs = 0;
        for mu in shapes.iter().filter(|m| m.len() == l) {
            for nu in shapes.iter().filter(|m| m.len() == l) {
                let (a, b) = (psi(mu), psi(nu));
                let mut inner = BigUint::from(0u32);
                for lambda in enumerate_partitions(l, None) {
                    inner += kostka(&lambda, &a.to_composition())? * kostka(&lambda, &b.to_composition())?;
                }
                let tables = count_matrices(&a, &b)?;
                if inner != tables {
                    mismatches.push(format!("{mu},{nu}: {inner} vs {tables}"));
                }
                pairs += 1;
            }
        }
        // l is the common length of μ and ν, reported in the k column
        checks.push(Check::new("rsk", l, None, mismatches.is_empty(), summary(pairs, &mismatches)));
    }
    Ok(checks)
}

fn pairing(max_k: usize) -> anyhow::Result<Vec<Check>> {
    let mut checks = Vec::new();
    for k in 1..=max_k {
        let mut bad = Vec::new();
        let labels = build_poset(k, PosetKind::Spherical);
        for lambda in labels.elements() {
            let f = pairing_coefficient(k, lambda)?;
            for t in 1..=2 * k as i64 - 2 {
                let value = f.eval(&BigRational::from_integer(t.into()));
                if value <= BigRational::from_integer(0.into()) {
                    bad.push(format!("{lambda} at t = {t}: {value}"));
                }
            }
        }
        checks.push(Check::new("pairing-positive", k, None, bad.is_empty(), summary(labels.len(), &bad)));
    }
    Ok(checks)
}

fn summary(total: usize, mismatches: &[String]) -> String {
    if mismatches.is_empty() {
        format!("{total} cases agree")
    } else {
        format!("{} of {total} differ: {}", mismatches.len(), mismatches.join("; "))
    }
}
