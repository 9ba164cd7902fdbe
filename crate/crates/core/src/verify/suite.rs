//! Named suites of seeded verification jobs.

use alloc::string::String;
use alloc::vec::Vec;

use rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::LinearSubspace;

/// One unit of work. Jobs carry only seeds and small parameters, so a suite
/// is reproducible from its name and seed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "job", rename_all = "snake_case")]
pub enum Job {
    Construction { m: usize, seed: u64, lines: usize },
    Twisted,
    Tree { seed: u64 },
    RandomCurve { seed: u64 },
    Caviglia { seed: u64 },
    Intadd { seed: u64 },
    Planar { family: String, d: usize, seed: u64 },
    NotSoFinite { seed: u64 },
    Saturation { seed: u64 },
    Structure { case: String },
    P3 { case: String, seed: u64 },
}

impl Job {
    /// Short human-readable label.
    pub fn label(&self) -> String {
        match self {
            Job::Construction { m, seed, .. } => alloc::format!("construction m={m} seed={seed}"),
            Job::Twisted => "twisted configuration".into(),
            Job::Tree { seed } => alloc::format!("tree seed={seed}"),
            Job::RandomCurve { seed } => alloc::format!("random curve seed={seed}"),
            Job::Caviglia { seed } => alloc::format!("caviglia pair seed={seed}"),
            Job::Intadd { seed } => alloc::format!("finite pair seed={seed}"),
            Job::Planar { family, d, seed } => alloc::format!("planar {family} d={d} seed={seed}"),
            Job::NotSoFinite { seed } => alloc::format!("curve plus points seed={seed}"),
            Job::Saturation { seed } => alloc::format!("nonsaturated seed={seed}"),
            Job::Structure { case } => alloc::format!("structure {case}"),
            Job::P3 { case, seed } => alloc::format!("p3 {case} seed={seed}"),
        }
    }
}

pub const SUITES: [&str; 12] = ["construction", "twisted", "trees", "main", "caviglia", "intadd", "planar", "hilbert_burch", "saturation", "structure", "p3", "all"];

/// SplitMix64 finalizer of `seed + salt * golden`.
pub fn mix_seed(seed: u64, salt: u64) -> u64 {
    let mut z = seed.wrapping_add(salt.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn seeded(seed: u64, tag: u64, n: u64, make: impl Fn(u64) -> Job) -> Vec<Job> {
    (0..n).map(|i| make(mix_seed(seed, tag * 1000 + i))).collect()
}

fn planar_jobs(seed: u64) -> Vec<Job> {
    let mut v = Vec::new();
    let s = mix_seed(seed, 7000);
    let job = |family: &str, d: usize, salt: u64| Job::Planar { family: family.into(), d, seed: mix_seed(s, salt) };
    for d in 2..=7 {
        v.push(job("collinear", d, d as u64));
    }
    for d in 3..=7 {
        v.push(job("collinear_plus_one", d, 100 + d as u64));
    }
    v.push(job("four_general", 4, 200));
    for i in 0..6 {
        v.push(job("random", 0, 300 + i));
    }
    v
}

/// Jobs of a named suite.
pub fn suite_jobs(name: &str, seed: u64) -> Result<Vec<Job>> {
    let jobs = match name {
        "construction" => (4..=6).map(|m| Job::Construction { m, seed: mix_seed(seed, m as u64), lines: 50 }).collect(),
        "twisted" => alloc::vec![Job::Twisted, Job::Structure { case: StructureCase::TwistedSplit.name().into() }],
        "trees" => seeded(seed, 1, 8, |s| Job::Tree { seed: s }),
        "main" => seeded(seed, 2, 8, |s| Job::RandomCurve { seed: s }),
        "caviglia" => seeded(seed, 3, 10, |s| Job::Caviglia { seed: s }),
        "intadd" => seeded(seed, 4, 10, |s| Job::Intadd { seed: s }),
        "planar" => planar_jobs(seed),
        "hilbert_burch" => seeded(seed, 5, 8, |s| Job::NotSoFinite { seed: s }),
        "saturation" => seeded(seed, 6, 10, |s| Job::Saturation { seed: s }),
        "structure" => StructureCase::ALL.iter().map(|c| Job::Structure { case: c.name().into() }).collect(),
        "p3" => P3Case::ALL.iter().enumerate().map(|(i, c)| Job::P3 { case: c.name().into(), seed: mix_seed(seed, 8000 + i as u64) }).collect(),
        "all" => {
            let mut v = Vec::new();
            for s in SUITES.iter().filter(|s| **s != "all" && **s != "twisted") {
                v.extend(suite_jobs(s, seed)?);
            }
            v.push(Job::Twisted);
            v
        }
        other => return Err(Error::InvalidArgument(alloc::format!("unknown suite {other:?}; expected one of {}", SUITES.join(", ")))),
    };
    Ok(jobs)
}

fn planar_family(family: &str, d: usize) -> Result<PlanarFamily> {
    Ok(match family {
        "collinear" => PlanarFamily::Collinear(d),
        "collinear_plus_one" => PlanarFamily::CollinearPlusOne(d),
        "four_general" => PlanarFamily::FourGeneral,
        "random" => PlanarFamily::Random,
        other => return Err(Error::InvalidArgument(alloc::format!("unknown planar family {other:?}"))),
    })
}

fn structure_case(name: &str) -> Result<StructureCase> {
    StructureCase::ALL.into_iter().find(|c| c.name() == name).ok_or_else(|| Error::InvalidArgument(alloc::format!("unknown structure case {name:?}")))
}

fn p3_case(name: &str) -> Result<P3Case> {
    P3Case::ALL.into_iter().find(|c| c.name() == name).ok_or_else(|| Error::InvalidArgument(alloc::format!("unknown P^3 case {name:?}")))
}

fn job_seed(job: &Job) -> Option<u64> {
    match job {
        Job::Twisted | Job::Structure { .. } => None,
        Job::Construction { seed, .. }
        | Job::Tree { seed }
        | Job::RandomCurve { seed }
        | Job::Caviglia { seed }
        | Job::Intadd { seed }
        | Job::Planar { seed, .. }
        | Job::NotSoFinite { seed }
        | Job::Saturation { seed }
        | Job::P3 { seed, .. } => Some(*seed),
    }
}

fn job_check(job: &Job) -> &'static str {
    match job {
        Job::Construction { .. } => "construction",
        Job::Twisted => "twisted_config",
        Job::Tree { .. } | Job::RandomCurve { .. } => "main_theorem",
        Job::Caviglia { .. } => "caviglia",
        Job::Intadd { .. } => "intadd",
        Job::Planar { .. } => "finite_in_plane",
        Job::NotSoFinite { .. } => "not_so_finite",
        Job::Saturation { .. } => "regularity_from_saturation",
        Job::Structure { .. } => "structure_props",
        Job::P3 { .. } => "p3_theorem",
    }
}

/// Runs one job. Errors become failing reports, so a job always yields at
/// least one report.
pub fn run_job<F: Field>(field: &F, job: &Job) -> Vec<CheckReport> {
    let seed = job_seed(job);
    match run_job_inner(field, job) {
        Ok(mut v) => {
            for r in &mut v {
                if r.seed.is_none() {
                    r.seed = seed;
                }
            }
            v
        }
        Err(e) => alloc::vec![error_report(job_check(job), &job.label(), seed, &e)],
    }
}

fn run_job_inner<F: Field>(field: &F, job: &Job) -> Result<Vec<CheckReport>> {
    let label = job.label();
    let l = label.as_str();
    let f = field.clone();
    Ok(match job {
        Job::Construction { m, seed, lines } => alloc::vec![check_construction(f, *m, *seed, *lines)?],
        Job::Twisted => alloc::vec![check_twisted_config(f)?],
        Job::Tree { seed } => {
            let c = random_tree(f, *seed)?;
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let n = c.ring().nvars() as i64 - 1;
            let k = (*seed % n.max(1) as u64) as i64;
            let lambda = LinearSubspace::whole(c.ring()).random_subspace(k, &mut rng)?;
            alloc::vec![check_main_theorem(l, &c)?, check_mincur(l, &c)?, check_linear_section(l, &c, &lambda, 2, *seed)?]
        }
        Job::RandomCurve { seed } => {
            let c = random_curve(f, *seed)?.curve;
            alloc::vec![check_main_theorem(l, &c)?, check_mincur(l, &c)?]
        }
        Job::Caviglia { seed } => {
            let (i, j) = caviglia_pair(f, *seed)?;
            alloc::vec![check_caviglia(l, &i, &j)?]
        }
        Job::Intadd { seed } => {
            let (x, y) = finite_pair(f, *seed)?;
            alloc::vec![check_intadd(l, &x, &y)?]
        }
        Job::Planar { family, d, seed } => {
            let x = planar_points(f, planar_family(family, *d)?, *seed)?;
            alloc::vec![check_finite_in_plane(l, &x)?, check_hilbert_burch(l, &x, 0)?]
        }
        Job::NotSoFinite { seed } => {
            let (form, y) = curve_plus_points(f, *seed)?;
            let d = form.degree().unwrap_or(0) as i64;
            let dd = crate::ideal::Ideal::new(y.ring(), alloc::vec![form.clone()])?;
            let union = dd.intersect(&y)?;
            alloc::vec![check_not_so_finite(l, &form, &y)?, check_hilbert_burch(l, &union, d)?]
        }
        Job::Saturation { seed } => {
            let i = nonsaturated_ideal(f.clone(), *seed)?;
            let j = nonsaturated_ideal(f, mix_seed(*seed, 1))?;
            let mut v = alloc::vec![check_regularity_from_saturation(l, &i)?];
            if i.ring().compatible(j.ring()) {
                v.push(check_saturation_of_intersection(l, &i, &j)?);
            }
            v
        }
        Job::Structure { case } => {
            let (c, d) = structure_case(case)?.build(f)?;
            alloc::vec![check_structure_props(l, &c, &d)?, check_xi_sum(l, &c, &d)?]
        }
        Job::P3 { case, seed } => {
            let c = p3_case(case)?.build(f)?;
            alloc::vec![check_p3_theorem(l, &c, *seed, 6)?, check_main_theorem(l, &c)?]
        }
    })
}

/// Runs every job of a suite in order.
pub fn run_suite<F: Field>(field: &F, name: &str, seed: u64) -> Result<Vec<CheckReport>> {
    Ok(suite_jobs(name, seed)?.iter().flat_map(|j| run_job(field, j)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_are_deterministic() {
        for s in SUITES {
            assert_eq!(suite_jobs(s, 7).unwrap(), suite_jobs(s, 7).unwrap());
        }
        assert_ne!(suite_jobs("trees", 7).unwrap(), suite_jobs("trees", 8).unwrap());
        assert!(suite_jobs("nope", 1).is_err());
    }
}
