//! The randomized property battery over the built-in corpus.
//!
//! Every property draws from its own ChaCha8 stream, keyed by the seed, the property id and
//! the trial or bimodule index, so results do not depend on evaluation order or threading.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use anyhow::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use sdcheck_core::algebra::{
    cyclic_group_table, group_ring, quotient_algebra, square_zero_local_ring, truncated_polynomial_ring, Algebra,
};
use sdcheck_core::corpus::{corpus_algebra, corpus_algebras, corpus_bimodules, morita, rsquared, CorpusBimodule};
use sdcheck_core::foxby::{
    bcschar_complex, check_faithful, check_semidualizing, foxby_backward, foxby_forward, hha_compare,
    homeval_dims, ic_preenvelope, injective_cogenerator, left_right_inverses, pc_precover, symmetric_bimodule,
    tensoreval_dims, theorem2_complex, FoxbyContext, HhaInput, Overall,
};
use sdcheck_core::homology::{ext_dims, ext_dims_injective, tor_dims};
use sdcheck_core::modrep::{
    hom_from_bimodule, random_injective, random_module_rng, random_projective, random_ses, simple_module,
    tensor_over, Bimodule, LeftModule,
};
use sdcheck_core::PrimeField;

use crate::check::REPORT_VERSION;
use crate::oracle::{brute_radical, column_span, corner_bimodule, faithful_oracle, ElementSpace};

/// Witnesses kept per property.
pub const MAX_WITNESSES: usize = 5;
/// Length of the spliced complexes built for the characterization checks.
pub const COMPLEX_LENGTH: usize = 4;
/// Largest degree compared in the balance, evaluation and Holm-type tables.
pub const TABLE_DEGREE: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub bound: usize,
    pub trials: usize,
    pub max_dim: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            bound: 8,
            trials: 20,
            max_dim: 6,
        }
    }
}

pub const PROPERTIES: [(u32, &str); 15] = [
    (1, "rank-one regular bimodules are faithfully semidualizing"),
    (2, "Morita row space: semidualizing with invertible round trips"),
    (3, "R+R is rejected at (b2) with dimension 4 dim R"),
    (4, "dualizing module of F2[x,y]/(x2,xy,y2) and the non-member k"),
    (5, "projectives lie in A_C and injectives in B_C"),
    (6, "left-right inverse identities of mu and nu"),
    (7, "two-of-three on short exact sequences"),
    (8, "characterizing complexes for members and non-members"),
    (9, "Ext and Tor comparison tables agree"),
    (10, "tensor and Hom evaluation dimension identities"),
    (11, "precover and preenvelope factorization certificates"),
    (12, "faithfulness agrees with cyclic-module enumeration"),
    (13, "Ext by projective resolutions equals the injective route"),
    (14, "Jacobson radical agrees with nilpotent-ideal enumeration"),
    (15, "identical parameters give identical results"),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub id: u32,
    pub name: String,
    pub checks: usize,
    pub failures: usize,
    pub witnesses: Vec<String>,
    /// named counters, e.g. how many non-members were found
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, usize>,
    pub elapsed_ms: u64,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusEntry {
    pub name: String,
    pub left_algebra: String,
    pub right_algebra: String,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub report_version: u32,
    pub seed: u64,
    pub bound: usize,
    pub trials: usize,
    pub max_dim: usize,
    pub corpus: Vec<CorpusEntry>,
    pub properties: Vec<PropertyResult>,
    pub passed: bool,
    pub wall_clock_ms: u64,
}

/// `(id, checks, failures, witnesses, counts)` per property: the report without timings.
pub type WitnessSet = Vec<(u32, usize, usize, Vec<String>, BTreeMap<String, usize>)>;

impl SuiteReport {
    pub fn witness_set(&self) -> WitnessSet {
        self.properties
            .iter()
            .map(|p| (p.id, p.checks, p.failures, p.witnesses.clone(), p.counts.clone()))
            .collect()
    }
}

#[derive(Clone, Debug, Default)]
struct Tally {
    checks: usize,
    failures: usize,
    witnesses: Vec<String>,
    counts: BTreeMap<String, usize>,
}

impl Tally {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(witness());
        }
    }

    fn fail(&mut self, witness: String) {
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }

    /// Counts an engine error as a failed check.
    fn run(&mut self, label: impl FnOnce() -> String, body: impl FnOnce(&mut Tally) -> Result<()>) {
        if let Err(e) = body(self) {
            self.checks += 1;
            self.fail(format!("{}: error: {e}", label()));
        }
    }

    fn count(&mut self, key: &str) {
        *self.counts.entry(key.to_string()).or_default() += 1;
    }

    fn absorb(&mut self, other: Tally) {
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        self.checks += other.checks;
        self.failures += other.failures;
        for w in other.witnesses {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
    }
}

fn merge(tallies: Vec<Tally>) -> Tally {
    let mut out = Tally::default();
    for t in tallies {
        out.absorb(t);
    }
    out
}

/// The corpus bimodules with shared resolutions, and the parameters.
pub struct Suite {
    cfg: SuiteConfig,
    algebras: Vec<Arc<Algebra>>,
    corpus: Vec<CorpusBimodule>,
    contexts: Vec<FoxbyContext>,
}

impl Suite {
    pub fn new(cfg: SuiteConfig) -> Self {
        let corpus = corpus_bimodules();
        let contexts = corpus.iter().map(|b| FoxbyContext::new(&b.bimodule, cfg.bound)).collect();
        Suite {
            cfg,
            algebras: corpus_algebras(),
            corpus,
            contexts,
        }
    }

    pub fn config(&self) -> SuiteConfig {
        self.cfg
    }

    fn rng(&self, property: u32, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.cfg.seed);
        rng.set_stream(((property as u64) << 32) | index as u64);
        rng
    }

    /// `body` once per corpus bimodule, in parallel, merged in corpus order.
    fn per_bimodule<F>(&self, property: u32, body: F) -> Tally
    where
        F: Fn(&CorpusBimodule, &FoxbyContext, &mut ChaCha8Rng, &mut Tally) -> Result<()> + Sync,
    {
        let tallies = (0..self.corpus.len())
            .into_par_iter()
            .map(|i| {
                let mut t = Tally::default();
                let mut rng = self.rng(property, i);
                let b = &self.corpus[i];
                t.run(|| b.name.clone(), |t| body(b, &self.contexts[i], &mut rng, t));
                t
            })
            .collect();
        merge(tallies)
    }

    /// `body` for trials `0..n`, trial `t` using corpus bimodule `t mod |corpus|`.
    fn round_robin<F>(&self, property: u32, n: usize, body: F) -> Tally
    where
        F: Fn(usize, &CorpusBimodule, &FoxbyContext, &mut ChaCha8Rng, &mut Tally) -> Result<()> + Sync,
    {
        let tallies = (0..n)
            .into_par_iter()
            .map(|t| {
                let i = t % self.corpus.len();
                let mut tally = Tally::default();
                let mut rng = self.rng(property, t);
                let b = &self.corpus[i];
                tally.run(
                    || format!("{} #{t}", b.name),
                    |tally| body(t, b, &self.contexts[i], &mut rng, tally),
                );
                tally
            })
            .collect();
        merge(tallies)
    }

    fn per_algebra<F>(&self, algebras: &[Arc<Algebra>], body: F) -> Tally
    where
        F: Fn(usize, &Arc<Algebra>, &mut Tally) -> Result<()> + Sync,
    {
        let tallies = algebras
            .par_iter()
            .enumerate()
            .map(|(i, a)| {
                let mut t = Tally::default();
                t.run(|| a.name().to_string(), |t| body(i, a, t));
                t
            })
            .collect();
        merge(tallies)
    }

    pub fn run_property(&self, id: u32) -> PropertyResult {
        let start = Instant::now();
        let tally = match id {
            1 => self.rank_one(),
            2 => self.morita_round_trips(),
            3 => self.negative_control(),
            4 => self.dualizing_example(),
            5 => self.flat_members(),
            6 => self.left_right_inverses(),
            7 => self.two_of_three(),
            8 => self.characterizing_complexes(),
            9 => self.hha_tables(),
            10 => self.evaluation_identities(),
            11 => self.precovers(),
            12 => self.faithfulness_oracle(),
            13 => self.balance(),
            14 => self.radical_oracle(),
            15 => self.determinism(),
            _ => {
                let mut t = Tally::default();
                t.check(false, || format!("no property {id}"));
                t
            }
        };
        let name = PROPERTIES.iter().find(|p| p.0 == id).map_or("unknown", |p| p.1);
        PropertyResult {
            id,
            name: name.to_string(),
            checks: tally.checks,
            failures: tally.failures,
            witnesses: tally.witnesses,
            counts: tally.counts,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }

    pub fn run_all(&self) -> SuiteReport {
        let ids: Vec<u32> = PROPERTIES.iter().map(|p| p.0).collect();
        self.run_all_of(&ids)
    }

    /// The report restricted to the properties `ids`, in the given order.
    pub fn run_all_of(&self, ids: &[u32]) -> SuiteReport {
        let start = Instant::now();
        let properties: Vec<PropertyResult> = ids.iter().map(|&id| self.run_property(id)).collect();
        SuiteReport {
            report_version: REPORT_VERSION,
            seed: self.cfg.seed,
            bound: self.cfg.bound,
            trials: self.cfg.trials,
            max_dim: self.cfg.max_dim,
            corpus: self
                .corpus
                .iter()
                .map(|b| CorpusEntry {
                    name: b.name.clone(),
                    left_algebra: b.bimodule.left_algebra().name().to_string(),
                    right_algebra: b.bimodule.right_algebra().name().to_string(),
                    dim: b.bimodule.dim(),
                })
                .collect(),
            passed: properties.iter().all(PropertyResult::passed),
            properties,
            wall_clock_ms: start.elapsed().as_millis() as u64,
        }
    }

    fn rank_one(&self) -> Tally {
        let bound = self.cfg.bound;
        self.per_algebra(&self.algebras, |_, a, t| {
            let reg = Bimodule::regular(a.clone());
            let rep = check_semidualizing(&reg, bound)?;
            t.check(rep.overall == Overall::Yes, || format!("regular({}): {:?}", a.name(), rep.overall));
            let faithful = check_faithful(&reg)?.faithful;
            t.check(faithful, || format!("regular({}) is not faithful", a.name()));
            Ok(())
        })
    }

    fn morita_round_trips(&self) -> Tally {
        let cfg = self.cfg;
        let tallies = [2u32, 3]
            .par_iter()
            .map(|&p| {
                let mut t = Tally::default();
                t.run(
                    || format!("morita({p},2)"),
                    |t| {
                        let c = morita(p, 2)?;
                        let rep = check_semidualizing(&c, cfg.bound)?;
                        t.check(rep.overall.is_yes(), || format!("morita({p},2): {:?}", rep.overall));
                        let ctx = FoxbyContext::new(&c, cfg.bound);
                        let mut rng = self.rng(2, p as usize);
                        for trial in 0..cfg.trials {
                            let m = random_module_rng(c.right_algebra(), cfg.max_dim, &mut rng);
                            let member = ctx.auslander(&m)?.is_member();
                            t.check(member, || format!("morita({p},2) #{trial}: R-module not in A_C"));
                            let fwd = foxby_forward(&c, &m)?;
                            let back = foxby_backward(&c, &fwd.image)?;
                            t.check(fwd.invertible && back.invertible, || {
                                format!("morita({p},2) #{trial}: mu {:?} / nu {:?} not invertible", fwd.shape(), back.shape())
                            });
                            let n = random_module_rng(c.left_algebra(), cfg.max_dim, &mut rng);
                            let member = ctx.bass(&n)?.is_member();
                            t.check(member, || format!("morita({p},2) #{trial}: S-module not in B_C"));
                            let back = foxby_backward(&c, &n)?;
                            let fwd = foxby_forward(&c, &back.image)?;
                            t.check(fwd.invertible && back.invertible, || {
                                format!("morita({p},2) #{trial}: nu {:?} / mu {:?} not invertible", back.shape(), fwd.shape())
                            });
                        }
                        Ok(())
                    },
                );
                t
            })
            .collect();
        merge(tallies)
    }

    fn negative_control(&self) -> Tally {
        let bound = self.cfg.bound;
        self.per_algebra(&self.algebras, |_, a, t| {
            let rep = check_semidualizing(&rsquared(a), bound)?;
            let b2 = rep.condition("b2");
            let expected = vec![a.dim(), 4 * a.dim()];
            let ok = matches!(&rep.overall, Overall::No { failing } if failing.iter().any(|l| l == "b2"))
                && b2.is_some_and(|c| c.failed() && c.dims == expected);
            t.check(ok, || format!("rsquared({}): {:?}, b2 {:?}", a.name(), rep.overall, b2));
            Ok(())
        })
    }

    fn dualizing_example(&self) -> Tally {
        let bound = self.cfg.bound;
        let mut t = Tally::default();
        t.run(
            || "dualizing(F2[x,y]/(x2,xy,y2))".into(),
            |t| {
                let r = corpus_algebra("F2[x,y]/(x2,xy,y2)").expect("corpus algebra");
                let c = sdcheck_core::corpus::dualizing(&r)?;
                let rep = check_semidualizing(&c, bound)?;
                t.check(rep.overall.is_yes(), || format!("not semidualizing: {:?}", rep.overall));
                t.check(check_faithful(&c)?.faithful, || "not faithful".into());
                let k = simple_module(&r);
                let member = FoxbyContext::new(&c, bound).auslander(&k)?;
                let witness = member.witness().cloned();
                let degree = witness.as_ref().and_then(|w| w.degree);
                t.check(degree.is_some_and(|d| d <= bound), || format!("k: no witness within the bound: {:?}", member.verdict));
                // Tor^R(C, k) by resolving k against Ext_{R^op}(C, k) by resolving C
                let direct = tor_dims(&c, &k, TABLE_DEGREE)?.dims;
                let e = injective_cogenerator(&r);
                let via: Vec<usize> = homeval_dims(c.right(), &symmetric_bimodule(&k)?, &e, TABLE_DEGREE)?
                    .into_iter()
                    .map(|(_, rhs)| rhs)
                    .collect();
                t.check(direct == via, || format!("Tor(C,k) {direct:?} but dual route {via:?}"));
                if witness.as_ref().is_some_and(|w| w.label == "A1") {
                    let first = direct.iter().skip(1).position(|&d| d != 0).map(|i| i + 1);
                    t.check(first == degree, || format!("A1 witnessed at {degree:?}, Tor first nonzero at {first:?}"));
                }
                Ok(())
            },
        );
        t
    }

    fn flat_members(&self) -> Tally {
        let cfg = self.cfg;
        self.round_robin(5, cfg.trials * 5 / 2, |trial, b, ctx, rng, t| {
            let c = &b.bimodule;
            let p = random_projective(c.right_algebra(), cfg.max_dim, rng);
            let rep = ctx.auslander(&p)?;
            t.check(rep.is_member(), || format!("{} #{trial}: projective of dim {} fails {:?}", b.name, p.dim(), rep.verdict));
            let i = random_injective(c.left_algebra(), cfg.max_dim, rng);
            let rep = ctx.bass(&i)?;
            t.check(rep.is_member(), || format!("{} #{trial}: injective of dim {} fails {:?}", b.name, i.dim(), rep.verdict));
            Ok(())
        })
    }

    fn left_right_inverses(&self) -> Tally {
        let cfg = self.cfg;
        self.per_bimodule(6, |b, _, rng, t| {
            let c = &b.bimodule;
            for trial in 0..cfg.trials * 5 / 2 {
                let m = random_module_rng(c.right_algebra(), cfg.max_dim, rng);
                let n = random_module_rng(c.left_algebra(), cfg.max_dim, rng);
                let (first, second) = left_right_inverses(c, &m, &n)?;
                t.check(first && second, || {
                    format!("{} #{trial}: identities ({first}, {second}) for dims ({}, {})", b.name, m.dim(), n.dim())
                });
            }
            Ok(())
        })
    }

    /// Short exact sequences alternate between `R`-modules (Auslander class) and `S`-modules
    /// (Bass class).
    fn two_of_three(&self) -> Tally {
        let cfg = self.cfg;
        self.per_bimodule(7, |b, ctx, rng, t| {
            if !b.faithfully_semidualizing {
                return Ok(());
            }
            let c = &b.bimodule;
            for trial in 0..cfg.trials * 5 {
                let auslander = trial % 2 == 0;
                let a = if auslander { c.right_algebra() } else { c.left_algebra() };
                let ses = random_ses(a, cfg.max_dim, rng);
                let member = |m: &LeftModule| -> Result<bool> {
                    Ok(if auslander { ctx.auslander(m)? } else { ctx.bass(m)? }.is_member())
                };
                let v = [member(&ses.sub)?, member(&ses.mid)?, member(&ses.quo)?];
                let count = v.iter().filter(|&&x| x).count();
                t.check(count != 2, || {
                    let class = if auslander { "A_C" } else { "B_C" };
                    format!(
                        "{} #{trial}: in {class}: sub {} mid {} quo {} (dims {} {} {})",
                        b.name,
                        v[0],
                        v[1],
                        v[2],
                        ses.sub.dim(),
                        ses.mid.dim(),
                        ses.quo.dim()
                    )
                });
            }
            Ok(())
        })
    }

    /// Members and non-members are drawn from random modules, projectives or injectives, and
    /// the modules `Hom(C, I)` and `C⊗P`, until `trials` of each are found or the attempts run out.
    fn characterizing_complexes(&self) -> Tally {
        let cfg = self.cfg;
        self.per_bimodule(8, |b, ctx, rng, t| {
            let c = &b.bimodule;
            for auslander in [true, false] {
                let (mut members, mut others) = (0, 0);
                for attempt in 0..cfg.trials * 10 {
                    if members >= cfg.trials && others >= cfg.trials {
                        break;
                    }
                    let m = match (auslander, attempt % 3) {
                        (true, 0) => random_module_rng(c.right_algebra(), cfg.max_dim, rng),
                        (true, 1) => random_projective(c.right_algebra(), cfg.max_dim, rng),
                        (true, _) => {
                            let i = random_injective(c.left_algebra(), cfg.max_dim, rng);
                            hom_from_bimodule(c, &i)?.module
                        }
                        (false, 0) => random_module_rng(c.left_algebra(), cfg.max_dim, rng),
                        (false, 1) => random_injective(c.left_algebra(), cfg.max_dim, rng),
                        (false, _) => {
                            let p = random_projective(c.right_algebra(), cfg.max_dim.min(3), rng);
                            tensor_over(c, &p)?.module
                        }
                    };
                    let member = if auslander { ctx.auslander(&m)? } else { ctx.bass(&m)? }.is_member();
                    if (member && members >= cfg.trials) || (!member && others >= cfg.trials) {
                        continue;
                    }
                    let x = if auslander {
                        theorem2_complex(c, &m, COMPLEX_LENGTH)?
                    } else {
                        bcschar_complex(c, &m, COMPLEX_LENGTH)?
                    };
                    let side = if auslander { "A_C" } else { "B_C" };
                    t.count(&format!("{side} {}", if member { "members" } else { "non-members" }));
                    if member {
                        members += 1;
                        t.check(x.all_hold(), || {
                            format!("{} {side} member #{attempt} (dim {}): failing {:?}", b.name, m.dim(), x.failing())
                        });
                    } else {
                        others += 1;
                        t.check(!x.failing().is_empty(), || {
                            format!("{} {side} non-member #{attempt} (dim {}): every condition holds", b.name, m.dim())
                        });
                    }
                }
            }
            Ok(())
        })
    }

    /// Each trial runs one Ext variant (alternating Auslander and Bass) and the Tor variant,
    /// resampling until the hypotheses hold; every other attempt uses modules that satisfy
    /// them by construction.
    fn hha_tables(&self) -> Tally {
        let cfg = self.cfg;
        self.round_robin(9, cfg.trials, |trial, b, ctx, rng, t| {
            let c = &b.bimodule;
            let (r, s) = (c.right_algebra(), c.left_algebra());
            let s_op = Arc::new(s.opposite());
            for variant in [if trial % 2 == 0 { 'a' } else { 'b' }, 'c'] {
                let mut found = false;
                for attempt in 0..10 {
                    let easy = attempt % 2 == 1;
                    let (x, y) = match variant {
                        'a' => (
                            if easy { random_projective(r, cfg.max_dim, rng) } else { random_module_rng(r, cfg.max_dim, rng) },
                            if easy { random_projective(r, cfg.max_dim, rng) } else { random_module_rng(r, cfg.max_dim, rng) },
                        ),
                        'b' => (
                            if easy { random_injective(s, cfg.max_dim, rng) } else { random_module_rng(s, cfg.max_dim, rng) },
                            if easy { random_injective(s, cfg.max_dim, rng) } else { random_module_rng(s, cfg.max_dim, rng) },
                        ),
                        _ => (
                            if easy { random_injective(s, cfg.max_dim, rng) } else { random_module_rng(s, cfg.max_dim, rng) },
                            if easy { random_projective(&s_op, cfg.max_dim, rng) } else { random_module_rng(&s_op, cfg.max_dim, rng) },
                        ),
                    };
                    let input = match variant {
                        'a' => HhaInput::Auslander { m: &x, m_prime: &y },
                        'b' => HhaInput::Bass { n: &x, n_prime: &y },
                        _ => HhaInput::Tor { n: &x, n_tilde: &y },
                    };
                    let table = hha_compare(ctx, input, TABLE_DEGREE)?;
                    if table.hypotheses_hold {
                        t.check(table.agree(), || format!("{} #{trial} ({variant}): rows {:?}", b.name, table.rows));
                        found = true;
                        break;
                    }
                }
                t.check(found, || format!("{} #{trial} ({variant}): no pair satisfied the hypotheses", b.name));
            }
            Ok(())
        })
    }

    fn evaluation_identities(&self) -> Tally {
        let cfg = self.cfg;
        self.round_robin(10, cfg.trials, |trial, b, _, rng, t| {
            let c = &b.bimodule;
            let m = random_module_rng(c.left_algebra(), cfg.max_dim, rng);
            let f = random_projective(c.right_algebra(), cfg.max_dim, rng);
            let rows = tensoreval_dims(&m, c, &f, TABLE_DEGREE)?;
            t.check(rows.iter().all(|(x, y)| x == y), || format!("{} #{trial}: tensor evaluation {rows:?}", b.name));
            let m = random_module_rng(c.right().algebra(), cfg.max_dim, rng);
            let i = random_injective(c.left_algebra(), cfg.max_dim, rng);
            let rows = homeval_dims(&m, c, &i, TABLE_DEGREE)?;
            t.check(rows.iter().all(|(x, y)| x == y), || format!("{} #{trial}: Hom evaluation {rows:?}", b.name));
            Ok(())
        })
    }

    fn precovers(&self) -> Tally {
        let cfg = self.cfg;
        self.per_bimodule(11, |b, _, rng, t| {
            let c = &b.bimodule;
            let (r, s) = (c.right_algebra(), c.left_algebra());
            for trial in 0..cfg.trials {
                let n = random_module_rng(s, cfg.max_dim, rng);
                let cert = pc_precover(c, &n)?;
                t.check(cert.all_factor, || format!("{} #{trial}: P_C-precover of dim {} does not factor", b.name, n.dim()));
                let m = random_module_rng(r, cfg.max_dim, rng);
                let cert = ic_preenvelope(c, &m)?;
                t.check(cert.all_factor, || format!("{} #{trial}: I_C-preenvelope of dim {} does not factor", b.name, m.dim()));
                if trial % 2 == 0 {
                    let p = random_projective(r, cfg.max_dim.min(3), rng);
                    let member = tensor_over(c, &p)?.module;
                    let cert = pc_precover(c, &member)?;
                    t.check(cert.all_factor && cert.split, || format!("{} #{trial}: C⊗P precover does not split", b.name));
                    let i = random_injective(s, cfg.max_dim, rng);
                    let member = hom_from_bimodule(c, &i)?.module;
                    let cert = ic_preenvelope(c, &member)?;
                    t.check(cert.all_factor && cert.split, || format!("{} #{trial}: Hom(C,I) preenvelope does not split", b.name));
                }
            }
            Ok(())
        })
    }

    /// The corpus, plus `eA` for the two primitive idempotents of `F2 x F2` as non-faithful
    /// controls.
    fn faithfulness_oracle(&self) -> Tally {
        let mut cases: Vec<(String, Bimodule)> = self.corpus.iter().map(|b| (b.name.clone(), b.bimodule.clone())).collect();
        let prod = corpus_algebra("F2xF2").expect("corpus algebra");
        for e in [[1, 0], [0, 1]] {
            match corner_bimodule(&prod, &e) {
                Ok(c) => cases.push((format!("corner(F2xF2,{e:?})"), c)),
                Err(err) => {
                    let mut t = Tally::default();
                    t.check(false, || format!("corner bimodule: {err}"));
                    return t;
                }
            }
        }
        let tallies = cases
            .par_iter()
            .map(|(name, c)| {
                let mut t = Tally::default();
                t.run(
                    || name.clone(),
                    |t| {
                        let rep = check_faithful(c)?;
                        let (left, right) = faithful_oracle(c)?;
                        if let Some(l) = left {
                            t.check(rep.left.is_faithful() == l, || format!("{name}: S side says {}, oracle {l}", rep.left.is_faithful()));
                        }
                        if let Some(r) = right {
                            t.check(rep.right.is_faithful() == r, || format!("{name}: R side says {}, oracle {r}", rep.right.is_faithful()));
                        }
                        Ok(())
                    },
                );
                t
            })
            .collect();
        merge(tallies)
    }

    /// Pairs among the simple, regular and cogenerator modules of each corpus algebra (those of
    /// dimension at most `max_dim`), plus `trials / 5` random pairs per algebra.
    fn balance(&self) -> Tally {
        let cfg = self.cfg;
        self.per_algebra(&self.algebras, |i, a, t| {
            let mut mods: Vec<LeftModule> = vec![simple_module(a), LeftModule::regular(a.clone()), injective_cogenerator(a)];
            mods.retain(|m| m.dim() <= cfg.max_dim);
            let mut pairs: Vec<(LeftModule, LeftModule)> = Vec::new();
            for x in &mods {
                for y in &mods {
                    pairs.push((x.clone(), y.clone()));
                }
            }
            let mut rng = self.rng(13, i);
            for _ in 0..cfg.trials / 5 {
                pairs.push((random_module_rng(a, cfg.max_dim, &mut rng), random_module_rng(a, cfg.max_dim, &mut rng)));
            }
            for (x, y) in &pairs {
                let proj = ext_dims(x, y, TABLE_DEGREE)?.dims;
                let inj = ext_dims_injective(x, y, TABLE_DEGREE)?.dims;
                t.check(proj == inj, || format!("{}: dims ({}, {}): {proj:?} vs {inj:?}", a.name(), x.dim(), y.dim()));
            }
            Ok(())
        })
    }

    /// Corpus algebras and a few more of order at most 16 against enumeration; `J(A/J) = 0` for all.
    fn radical_oracle(&self) -> Tally {
        let f2 = PrimeField::new(2).expect("prime");
        let f3 = PrimeField::new(3).expect("prime");
        let mut algebras = self.algebras.clone();
        for extra in [
            truncated_polynomial_ring(f2, 3),
            truncated_polynomial_ring(f2, 4),
            truncated_polynomial_ring(f3, 2),
            square_zero_local_ring(f2, 3),
            group_ring(f2, &cyclic_group_table(4)),
            group_ring(f3, &cyclic_group_table(2)),
        ] {
            algebras.push(Arc::new(extra.expect("well-formed algebra")));
        }
        self.per_algebra(&algebras, |_, a, t| {
            let j = &a.radical().basis;
            if ElementSpace::new(a.field().p(), a.dim()).is_ok_and(|s| s.size <= 16) {
                let brute = brute_radical(a)?;
                let fast = column_span(a, j)?;
                t.check(brute == fast, || {
                    format!("{}: enumeration gives {} elements, computed radical {}", a.name(), brute.count_ones(), fast.count_ones())
                });
            }
            let top = quotient_algebra(a, j)?;
            let jj = top.algebra.radical().dim();
            t.check(jj == 0, || format!("{}: J(A/J) has dimension {jj}", a.name()));
            Ok(())
        })
    }

    /// Re-runs the cheap randomized properties twice on a fresh suite.
    fn determinism(&self) -> Tally {
        let cfg = SuiteConfig {
            trials: self.cfg.trials.min(4),
            ..self.cfg
        };
        let mut t = Tally::default();
        let first = Suite::new(cfg);
        let second = Suite::new(cfg);
        for id in [5, 6, 7, 9] {
            let (a, b) = (first.run_property(id), second.run_property(id));
            let same = (a.checks, a.failures, &a.witnesses, &a.counts) == (b.checks, b.failures, &b.witnesses, &b.counts);
            t.check(same, || format!("property {id}: {} vs {} checks", a.checks, b.checks));
        }
        t
    }
}

pub fn run_suite(cfg: SuiteConfig) -> SuiteReport {
    Suite::new(cfg).run_all()
}
