use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::config::{parse_subset, Configuration, Subset};
use crate::error::{Error, Result};
use crate::subgroup::{analyze, sample, Edge, SubgroupAnalysis, SubgroupSpec};
use crate::wreath::{ConjugationAut, WreathElement};

/// Samples drawn per subset by [`verify`].
pub const DEFAULT_SAMPLES: usize = 8;

const SAMPLE_BOUND: u32 = 2;

/// The twist used by every construction: conjugation by `δ_0`.
pub fn twist() -> ConjugationAut {
    ConjugationAut::new(WreathElement::delta(0, 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSummary {
    pub size: usize,
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetReport {
    pub subset: Subset,
    pub fg: bool,
    pub components: Vec<ComponentSummary>,
}

impl SubsetReport {
    fn from_analysis(subset: Subset, analysis: &SubgroupAnalysis) -> Self {
        let components = analysis
            .iter()
            .map(|c| ComponentSummary {
                size: c.size(),
                class: c.classification.tag().to_string(),
            })
            .collect();
        Self {
            subset,
            fg: analysis.is_finitely_generated(),
            components,
        }
    }

    fn to_json(&self) -> Value {
        let components: Vec<Value> = self
            .components
            .iter()
            .map(|c| json!({ "size": c.size, "class": c.class }))
            .collect();
        json!({ "subset": self.subset.to_json(), "fg": self.fg, "components": components })
    }

    fn from_json(value: &Value, n: usize) -> Result<Self> {
        let subset = parse_subset(
            value
                .get("subset")
                .ok_or_else(|| Error::Malformed("report needs a \"subset\"".into()))?,
            n,
        )?;
        let fg = value
            .get("fg")
            .and_then(Value::as_bool)
            .ok_or_else(|| Error::Malformed("report needs a boolean \"fg\"".into()))?;
        let components = value
            .get("components")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Malformed("report needs a \"components\" array".into()))?
            .iter()
            .map(|c| {
                let size = c.get("size").and_then(Value::as_u64);
                let class = c.get("class").and_then(Value::as_str);
                match (size, class) {
                    (Some(size), Some(class)) => Ok(ComponentSummary {
                        size: size as usize,
                        class: class.to_string(),
                    }),
                    _ => Err(Error::Malformed(
                        "component summary needs \"size\" and \"class\"".into(),
                    )),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            subset,
            fg,
            components,
        })
    }
}

/// Subgroups `H_1..H_n` of `G^ambient_m` together with the analysis of every
/// intersection `H_I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationCertificate {
    pub config: Configuration,
    pub ambient_m: usize,
    pub specs: Vec<SubgroupSpec>,
    pub reports: Vec<SubsetReport>,
}

impl RealizationCertificate {
    pub fn to_json(&self) -> Value {
        json!({
            "config": self.config.to_json(),
            "ambient_m": self.ambient_m,
            "specs": self.specs.iter().map(SubgroupSpec::to_json).collect::<Vec<_>>(),
            "reports": self.reports.iter().map(SubsetReport::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let config = Configuration::from_json(
            value
                .get("config")
                .ok_or_else(|| Error::Malformed("certificate needs a \"config\"".into()))?,
        )?;
        let ambient_m = value
            .get("ambient_m")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Malformed("certificate needs an integer \"ambient_m\"".into()))?
            as usize;
        let specs = value
            .get("specs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Malformed("certificate needs a \"specs\" array".into()))?
            .iter()
            .map(SubgroupSpec::from_json)
            .collect::<Result<Vec<_>>>()?;
        let reports = value
            .get("reports")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Malformed("certificate needs a \"reports\" array".into()))?
            .iter()
            .map(|r| SubsetReport::from_json(r, config.n()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            config,
            ambient_m,
            specs,
            reports,
        })
    }

    /// `H_I`, the intersection of the specs indexed by `subset`.
    pub fn intersection(&self, subset: Subset) -> Result<SubgroupSpec> {
        intersect_subset(&self.specs, subset)
    }

    pub fn report(&self, subset: Subset) -> Option<&SubsetReport> {
        self.reports.iter().find(|r| r.subset == subset)
    }
}

pub(crate) fn intersect_subset(specs: &[SubgroupSpec], subset: Subset) -> Result<SubgroupSpec> {
    let mut elements = subset.elements();
    let first = elements
        .next()
        .ok_or_else(|| Error::InvalidSubset("empty subset".into()))?;
    let lookup = |i: usize| {
        specs.get(i - 1).ok_or_else(|| {
            Error::InvalidSubset(format!("index {i} exceeds the {} subgroups", specs.len()))
        })
    };
    let mut acc = lookup(first)?.clone();
    for i in elements {
        acc = acc.intersect(lookup(i)?)?;
    }
    Ok(acc)
}

fn reports_for(specs: &[SubgroupSpec], n: usize) -> Result<Vec<SubsetReport>> {
    Subset::all(n)
        .map(|s| {
            Ok(SubsetReport::from_analysis(
                s,
                &analyze(&intersect_subset(specs, s)?),
            ))
        })
        .collect()
}

/// Subgroups of `G^n` realizing the configuration that is 1 only on `subset`.
///
/// With `subset = {j_1 < ... < j_p}`, `H_{j_i}` is `g_{j_i} = g_{j_{i+1}}` for
/// `i < p` and `H_{j_p}` is `g_{j_p} = f(g_{j_1})` (a self-loop when `p = 1`);
/// every other `H_i` is trivial.
pub fn realize_atom(n: usize, subset: Subset) -> Result<Vec<SubgroupSpec>> {
    if subset.is_empty() {
        return Err(Error::InvalidSubset(
            "an atom needs a nonempty subset".into(),
        ));
    }
    if n == 0 || subset.max_element() > n {
        return Err(Error::InvalidSubset(format!(
            "{subset} is not a subset of [{n}]"
        )));
    }
    let members: Vec<usize> = subset.elements().collect();
    let mut specs: Vec<SubgroupSpec> = (1..=n)
        .map(|i| {
            if subset.contains(i) {
                SubgroupSpec::free(n)
            } else {
                SubgroupSpec::all_pinned(n)
            }
        })
        .collect();
    for pair in members.windows(2) {
        specs[pair[0] - 1].add_edge(Edge::equal(pair[0], pair[1]))?;
    }
    let (first, last) = (members[0], members[members.len() - 1]);
    specs[last - 1].add_edge(Edge::new(first, last, twist()))?;
    Ok(specs)
}

/// Realizes `config` in `G^{k·n}`, `k` the number of atoms; block `b`
/// (coordinates `(b-1)·n+1 ..= b·n`) hosts the atom for the `b`-th subset in
/// ascending mask order and each `H_i` is the product over blocks.
pub fn realize(config: &Configuration) -> Result<RealizationCertificate> {
    let n = config.n();
    let ones = config.ones();
    let (ambient_m, specs) = if ones.is_empty() {
        (n, vec![SubgroupSpec::all_pinned(n); n])
    } else {
        let ambient = ones.len() * n;
        let mut specs = vec![SubgroupSpec::free(ambient); n];
        for (block, &subset) in ones.iter().enumerate() {
            for (global, local) in specs.iter_mut().zip(realize_atom(n, subset)?) {
                global.merge(&local.translated(block * n, ambient)?)?;
            }
        }
        (ambient, specs)
    };
    let reports = reports_for(&specs, n)?;
    Ok(RealizationCertificate {
        config: config.clone(),
        ambient_m,
        specs,
        reports,
    })
}

/// Realizes `a.config ∨ b.config` in `G^{a.m + b.m}` with `L_i = H_i × K_i`:
/// `a`'s constraints on the first `a.ambient_m` coordinates, `b`'s after them.
pub fn join_certificates(
    a: &RealizationCertificate,
    b: &RealizationCertificate,
) -> Result<RealizationCertificate> {
    let config = a.config.join(&b.config)?;
    let ambient = a.ambient_m + b.ambient_m;
    let specs = a
        .specs
        .iter()
        .zip(&b.specs)
        .map(|(h, k)| {
            let mut l = h.translated(0, ambient)?;
            l.merge(&k.translated(a.ambient_m, ambient)?)?;
            Ok(l)
        })
        .collect::<Result<Vec<_>>>()?;
    let reports = reports_for(&specs, config.n())?;
    Ok(RealizationCertificate {
        config,
        ambient_m: ambient,
        specs,
        reports,
    })
}

/// Why a subset failed verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mismatch {
    /// Recomputed finite-generation verdict disagrees with the configuration.
    Verdict { expected_fg: bool, actual_fg: bool },
    /// The stored report differs from the recomputed one.
    Report,
    /// No report stored for the subset.
    MissingReport,
    /// A sampled element of `H_I` failed membership in some `H_i`.
    Sample { index: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verification {
    pub mismatches: Vec<(Subset, Mismatch)>,
}

impl Verification {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Offending subsets, ascending and without repeats.
    pub fn subsets(&self) -> Vec<Subset> {
        let mut s: Vec<Subset> = self.mismatches.iter().map(|(s, _)| *s).collect();
        s.sort();
        s.dedup();
        s
    }
}

/// Re-derives every verdict from `cert.specs` and compares; equivalent to
/// `verify_detailed(cert, DEFAULT_SAMPLES, 0)?.is_ok()`.
pub fn verify(cert: &RealizationCertificate) -> Result<bool> {
    Ok(verify_detailed(cert, DEFAULT_SAMPLES, 0)?.is_ok())
}

/// Full verification report; `samples` members of each `H_I` are drawn with
/// seeds derived from `seed` and the subset mask.
pub fn verify_detailed(
    cert: &RealizationCertificate,
    samples: usize,
    seed: u64,
) -> Result<Verification> {
    let n = cert.config.n();
    if cert.ambient_m == 0 {
        return Err(Error::Malformed("ambient power must be positive".into()));
    }
    if cert.specs.len() != n {
        return Err(Error::Malformed(format!(
            "expected {n} subgroups, found {}",
            cert.specs.len()
        )));
    }
    if let Some(spec) = cert.specs.iter().find(|s| s.m() != cert.ambient_m) {
        return Err(Error::MismatchedAmbient(spec.m(), cert.ambient_m));
    }
    let mut stored: BTreeMap<Subset, &SubsetReport> = BTreeMap::new();
    for r in &cert.reports {
        if stored.insert(r.subset, r).is_some() {
            return Err(Error::Malformed(format!(
                "duplicate report for {}",
                r.subset
            )));
        }
    }

    let mut outcome = Verification::default();
    for subset in Subset::all(n) {
        let spec = cert.intersection(subset)?;
        let analysis = analyze(&spec);
        let fresh = SubsetReport::from_analysis(subset, &analysis);
        let expected_fg = !cert.config.get(subset);
        if fresh.fg != expected_fg {
            outcome.mismatches.push((
                subset,
                Mismatch::Verdict {
                    expected_fg,
                    actual_fg: fresh.fg,
                },
            ));
        }
        match stored.get(&subset) {
            None => outcome.mismatches.push((subset, Mismatch::MissingReport)),
            Some(r) if **r != fresh => outcome.mismatches.push((subset, Mismatch::Report)),
            Some(_) => {}
        }
        for j in 0..samples {
            let x = sample(
                &spec,
                seed.wrapping_add(u64::from(subset.mask()) << 16 | j as u64),
                SAMPLE_BOUND,
            );
            if let Some(i) = subset
                .elements()
                .find(|&i| !cert.specs[i - 1].member(&x).unwrap_or(false))
            {
                outcome
                    .mismatches
                    .push((subset, Mismatch::Sample { index: i }));
                break;
            }
        }
    }
    Ok(outcome)
}
