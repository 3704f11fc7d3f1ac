//! Command-line front end: argument parsing, dispatch, output formats and the result cache.

pub mod cache;
pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::betti::{classify, BettiEngine, BettiError, DEFAULT_BUDGET};
use crate::homology::{alexander_dual_over, build_divisor_complex, reduced_homology, FieldSpec, HomologyProfile};
use crate::semigroup::{compositions, is_member_bruteforce, Multidegree, PinchConfig};
use crate::series::{canonical_series_check, coarse_coefficients, h_polynomial, h_polynomial_formula, hilbert_closed};
use crate::theorems::{expected_for, verify_with, TheoremError, VerificationReport};

use cache::FileCache;

/// Version of every JSON document this tool writes, cache files included.
pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable overriding `--cache-dir`.
pub const CACHE_ENV: &str = "PINCHED_CACHE_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "pinched",
    version,
    about = "Betti numbers, Hilbert series and classification of pinched Veronese rings"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Coefficient field: QQ, a prime p, or GF(p).
    #[arg(long, global = true, default_value = "GF(32003)")]
    field: FieldSpec,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for homology jobs (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Directory for cached homology profiles (also read from PINCHED_CACHE_DIR).
    #[arg(long, global = true, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,

    /// Refuse table computations whose estimated cost (complexes × 2^(N-1)) exceeds this.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

/// The ring `P_{n,d,m}`: give `--m`, or for two variables `-d` and `--pinch i` for `m = (i, d - i)`.
#[derive(Debug, Clone, Args)]
pub struct RingArgs {
    /// Number of variables (inferred from --m when omitted; 2 with --pinch).
    #[arg(short = 'n')]
    n: Option<usize>,
    /// Veronese degree (inferred from --m when omitted).
    #[arg(short = 'd')]
    d: Option<u32>,
    /// Pinched exponent vector, e.g. 2,1,0.
    #[arg(long = "m", conflicts_with = "pinch")]
    m: Option<Multidegree>,
    /// Two variables only: pinch m = (i, d - i).
    #[arg(long)]
    pinch: Option<u32>,
}

#[derive(Debug, Clone, Args)]
pub struct RangeArgs {
    /// Largest homological degree to scan (default N - 2).
    #[arg(long)]
    imax: Option<usize>,
    /// Largest coarse degree to scan (default imax + 3).
    #[arg(long)]
    smax: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the generators A_{n,d} \ {m} in descending lexicographic order.
    Gens(RingArgs),
    /// Decide whether h lies in the pinched semigroup.
    Member {
        #[command(flatten)]
        ring: RingArgs,
        /// The exponent vector to test, e.g. 5,1.
        #[arg(long)]
        h: Multidegree,
        /// Also run the brute-force oracle and compare.
        #[arg(long)]
        bruteforce: bool,
    },
    /// Closed Hilbert series, optionally expanded.
    Hilbert {
        #[command(flatten)]
        ring: RingArgs,
        /// Print coefficients of z^0, z^d, ... up to this degree.
        #[arg(long)]
        expand: Option<u32>,
    },
    /// h-polynomial of a two-variable ring, with the closed coefficient formulas.
    Hpoly(RingArgs),
    /// Graded Betti table.
    Betti {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Projective dimension, depth, CM, Gorenstein and linearity.
    Classify {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Compare computed tables with the closed formulas and classification claims.
    Verify {
        #[command(flatten)]
        ring: RingArgs,
        /// Sweep over rings, e.g. "n=2,d=3..7" or "n=2,d=6,i=0..3" or "n=3,d=3".
        #[arg(long)]
        sweep: Option<String>,
        /// Print every check, not only failures.
        #[arg(long, short = 'v')]
        verbose: bool,
    },
    /// Canonical partner t of the Veronese module S_{n,d,k} and the series-level check.
    Canonical {
        #[arg(short = 'n')]
        n: u32,
        #[arg(short = 'd')]
        d: u32,
        #[arg(short = 'k')]
        k: u32,
    },
    /// Divisor complex of h, its Alexander dual, and the duality check.
    Dualcheck {
        #[command(flatten)]
        ring: RingArgs,
        /// The degree whose divisor complex is built, e.g. 8,12.
        #[arg(long)]
        h: Multidegree,
        /// Print the face lists.
        #[arg(long)]
        faces: bool,
    },
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<BettiError> for Failure {
    fn from(e: BettiError) -> Self {
        let code = match e {
            BettiError::ResourceRefused { .. } => EXIT_RESOURCE,
            BettiError::Uncertified(_) => EXIT_VERIFY_FAILED,
            _ => EXIT_USAGE,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<TheoremError> for Failure {
    fn from(e: TheoremError) -> Self {
        match e {
            TheoremError::Betti(b) => b.into(),
            other => Failure::usage(other.to_string()),
        }
    }
}

impl RingArgs {
    fn resolve(&self) -> Result<PinchConfig, Failure> {
        let err = |e: crate::semigroup::SemigroupError| Failure::usage(e.to_string());
        match (&self.m, self.pinch) {
            (Some(m), None) => {
                if let Some(n) = self.n {
                    if n != m.len() {
                        return Err(Failure::usage(format!("-n {n} does not match --m {m}")));
                    }
                }
                if let Some(d) = self.d {
                    if d != m.total() {
                        return Err(Failure::usage(format!("-d {d} does not match |m| = {}", m.total())));
                    }
                }
                PinchConfig::from_pinch(m.coords()).map_err(err)
            }
            (None, Some(i)) => {
                if self.n.is_some_and(|n| n != 2) {
                    return Err(Failure::usage("--pinch needs two variables; use --m otherwise"));
                }
                let d = self.d.ok_or_else(|| Failure::usage("--pinch needs -d"))?;
                PinchConfig::binary(d, i).map_err(err)
            }
            _ => Err(Failure::usage("specify the pinch with --m or --pinch")),
        }
    }
}

struct Context {
    field: FieldSpec,
    format: Format,
    jobs: usize,
    cache_dir: Option<PathBuf>,
    budget: u64,
}

impl Context {
    /// Runs `f` with an engine wired to the cache, flushing the cache afterwards.
    fn with_engine<T>(
        &self,
        config: &PinchConfig,
        f: impl FnOnce(&BettiEngine<'_>) -> Result<T, Failure>,
    ) -> Result<T, Failure> {
        let cache = self.cache_dir.as_ref().map(|dir| FileCache::open(dir, config, self.field));
        let mut engine = BettiEngine::new(config, self.field).jobs(self.jobs).budget(self.budget);
        if let Some(c) = &cache {
            engine = engine.cache(c);
        }
        let out = f(&engine);
        if let Some(c) = &cache {
            c.flush().map_err(|e| Failure { code: EXIT_USAGE, message: format!("cache write failed: {e}") })?;
        }
        out
    }
}

fn json_doc<T: Serialize>(kind: &str, body: T) -> String {
    let mut v = serde_json::to_value(body).expect("serializable output");
    if let Some(obj) = v.as_object_mut() {
        let mut doc = serde_json::Map::new();
        doc.insert("schema_version".into(), SCHEMA_VERSION.into());
        doc.insert("kind".into(), kind.into());
        doc.extend(std::mem::take(obj));
        v = serde_json::Value::Object(doc);
    }
    let mut s = serde_json::to_string_pretty(&v).expect("serializable output");
    s.push('\n');
    s
}

fn profile_text(p: &HomologyProfile) -> String {
    if p.is_acyclic() {
        return "acyclic".into();
    }
    p.dims().iter().map(|(k, v)| format!("H~{k} = {v}")).collect::<Vec<_>>().join(", ")
}

/// Parses `n=2,d=3..7[,i=a..b]` into the list of rings it names.
pub fn parse_sweep(sweep: &str) -> Result<Vec<PinchConfig>, String> {
    fn range(v: &str) -> Result<(u32, u32), String> {
        let parse = |s: &str| s.trim().parse::<u32>().map_err(|_| format!("bad number `{s}` in sweep"));
        match v.split_once("..") {
            Some((a, b)) => {
                let (a, b) = match b.strip_prefix('=') {
                    Some(b) => (parse(a)?, parse(b)?),
                    None => (parse(a)?, parse(b)?),
                };
                if a > b {
                    return Err(format!("empty range `{v}`"));
                }
                Ok((a, b))
            }
            None => parse(v).map(|x| (x, x)),
        }
    }
    let (mut n, mut d, mut i) = (None, None, None);
    for part in sweep.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| format!("expected key=value, got `{part}`"))?;
        let r = range(v)?;
        match k.trim() {
            "n" => n = Some(r),
            "d" => d = Some(r),
            "i" => i = Some(r),
            other => return Err(format!("unknown sweep key `{other}`")),
        }
    }
    let (n, d) = (n.unwrap_or((2, 2)), d.ok_or("sweep needs d=..")?);
    let mut out = Vec::new();
    for n in n.0..=n.1 {
        for d in d.0..=d.1 {
            if n == 2 {
                let (lo, hi) = i.unwrap_or((0, d.div_ceil(2)));
                for i in lo..=hi.min(d) {
                    out.push(PinchConfig::binary(d, i).map_err(|e| e.to_string())?);
                }
            } else {
                if i.is_some() {
                    return Err("i=.. applies to two variables only".into());
                }
                // One pinch per permutation class: partitions of d into at most n parts.
                for m in compositions(n as usize, d) {
                    let sorted = m.coords().windows(2).all(|w| w[0] >= w[1]);
                    if sorted {
                        match PinchConfig::new(n as usize, d, m) {
                            Ok(c) => out.push(c),
                            Err(crate::semigroup::SemigroupError::DegenerateQuadric(_)) => {}
                            Err(e) => return Err(e.to_string()),
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let ctx =
        Context { field: cli.field, format: cli.format, jobs: cli.jobs, cache_dir: cli.cache_dir, budget: cli.budget };
    let io = |e: std::io::Error| Failure { code: EXIT_USAGE, message: e.to_string() };
    let text = match cli.command {
        Command::Gens(ring) => {
            let config = ring.resolve()?;
            let gens = config.generators();
            match ctx.format {
                Format::Json => json_doc("generators", json!({ "config": config, "generators": gens.as_slice() })),
                Format::Csv => gens
                    .iter()
                    .map(|g| format!("{}\n", g.coords().iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
                    .collect(),
                Format::Text => {
                    let mut s = format!("{config}: {} generators\n", gens.len());
                    for g in gens.iter() {
                        s.push_str(&format!("{g}\n"));
                    }
                    s
                }
            }
        }
        Command::Member { ring, h, bruteforce } => {
            let config = ring.resolve()?;
            let closed = crate::semigroup::is_member_closed(&h, &config).map_err(|e| Failure::usage(e.to_string()))?;
            let brute = if bruteforce {
                let bound = h.total().max(config.d());
                Some(is_member_bruteforce(&h, &config, bound).map_err(|e| Failure::usage(e.to_string()))?)
            } else {
                None
            };
            let agree = brute.is_none_or(|b| b == closed);
            let s = match ctx.format {
                Format::Json => {
                    json_doc("membership", json!({ "config": config, "h": h, "member": closed, "bruteforce": brute }))
                }
                Format::Csv => format!(
                    "h,member,bruteforce\n\"{}\",{},{}\n",
                    h,
                    closed,
                    brute.map_or(String::new(), |b| b.to_string())
                ),
                Format::Text => match brute {
                    Some(b) => format!("{closed} (brute force: {b})\n"),
                    None => format!("{closed}\n"),
                },
            };
            out.write_all(s.as_bytes()).map_err(io)?;
            return Ok(if agree { EXIT_OK } else { EXIT_VERIFY_FAILED });
        }
        Command::Hilbert { ring, expand } => {
            let config = ring.resolve()?;
            let series = hilbert_closed(&config);
            let coeffs: Option<Vec<String>> = expand.map(|deg| {
                coarse_coefficients(&series, config.d(), deg / config.d()).iter().map(|c| c.to_string()).collect()
            });
            let degrees: Option<Vec<u32>> =
                coeffs.as_ref().map(|c| (0..c.len() as u32).map(|t| t * config.d()).collect());
            match ctx.format {
                Format::Json => {
                    let coefficients: Option<Vec<serde_json::Value>> = coeffs.as_ref().map(|c| {
                        c.iter().map(|v| v.parse::<i64>().map_or_else(|_| v.clone().into(), Into::into)).collect()
                    });
                    json_doc(
                        "hilbert_series",
                        json!({ "config": config, "series": series, "degrees": degrees, "coefficients": coefficients }),
                    )
                }
                Format::Csv => {
                    let mut s = String::from("degree,coefficient\n");
                    for (d, c) in degrees.iter().flatten().zip(coeffs.iter().flatten()) {
                        s.push_str(&format!("{d},{c}\n"));
                    }
                    s
                }
                Format::Text => {
                    let mut s = format!("{config}\nH(z) = {series}\n");
                    if let (Some(d), Some(c)) = (degrees, coeffs) {
                        let pairs: Vec<String> = d.iter().zip(&c).map(|(d, c)| format!("z^{d}: {c}")).collect();
                        s.push_str(&format!("{}\n", pairs.join(", ")));
                    }
                    s
                }
            }
        }
        Command::Hpoly(ring) => {
            let config = ring.resolve()?;
            let h = h_polynomial(&config).map_err(|e| Failure::usage(e.to_string()))?;
            let f = h_polynomial_formula(&config).map_err(|e| Failure::usage(e.to_string()))?;
            let agree = h == f;
            let s = match ctx.format {
                Format::Json => json_doc(
                    "h_polynomial",
                    json!({ "config": config, "variable": "y = z^d", "coefficients": h, "formula": f, "agree": agree }),
                ),
                Format::Csv => {
                    let mut s = String::from("power,coefficient,formula\n");
                    for k in 0..h.coeffs().len().max(f.coeffs().len()) {
                        s.push_str(&format!("{k},{},{}\n", h.coeff(k), f.coeff(k)));
                    }
                    s
                }
                Format::Text => format!(
                    "{config}\nh(y) = {}\nformula: {}\n{}\n",
                    h.to_string().replace('z', "y"),
                    f.to_string().replace('z', "y"),
                    if agree { "agree" } else { "DISAGREE" }
                ),
            };
            out.write_all(s.as_bytes()).map_err(io)?;
            return Ok(if agree { EXIT_OK } else { EXIT_VERIFY_FAILED });
        }
        Command::Betti { ring, range } => {
            let config = ring.resolve()?;
            let table = ctx.with_engine(&config, |engine| {
                let i_max = range.imax.unwrap_or(config.veronese_size() - 2);
                let s_max = range.smax.unwrap_or(i_max + 3);
                Ok(engine.graded_betti(i_max, s_max)?)
            })?;
            match ctx.format {
                Format::Json => json_doc("betti_table", &table),
                Format::Csv => render::betti_csv(&table),
                Format::Text => {
                    let mut s = render::betti_text(&table);
                    if let Ok(expected) = expected_for(&config) {
                        s.push_str("claims:\n");
                        s.push_str(&render::annotations_text(&table, &expected));
                    }
                    s
                }
            }
        }
        Command::Classify { ring, range } => {
            let config = ring.resolve()?;
            let (table, report) = ctx.with_engine(&config, |engine| {
                let i_max = range.imax.unwrap_or(config.veronese_size() - 2);
                let s_max = range.smax.unwrap_or(i_max + 3);
                let table = engine.graded_betti(i_max, s_max)?;
                let report = classify(&table)?;
                Ok((table, report))
            })?;
            match ctx.format {
                Format::Json => json_doc("classification", json!({ "config": config, "field": ctx.field, "scanned_range": { "i_max": table.i_max(), "s_max": table.s_max() }, "report": report })),
                Format::Csv => format!(
                    "pdim,depth,krull_dim,is_cm,is_gorenstein,linearity_index,observed_regularity\n{},{},{},{},{},{},{}\n",
                    report.pdim, report.depth, report.krull_dim, report.is_cm, report.is_gorenstein, report.linearity_index, report.observed_regularity
                ),
                Format::Text => format!("{config} over {}\n{}", ctx.field, render::classification_text(&report)),
            }
        }
        Command::Verify { ring, sweep, verbose } => {
            let configs = match sweep {
                Some(sweep) => parse_sweep(&sweep).map_err(Failure::usage)?,
                None => vec![ring.resolve()?],
            };
            let mut reports: Vec<VerificationReport> = Vec::new();
            for config in &configs {
                let r = ctx.with_engine(config, |engine| Ok(verify_with(engine, ctx.field)?))?;
                if ctx.format == Format::Text {
                    out.write_all(render::verification_text(&r, verbose).as_bytes()).map_err(io)?;
                }
                reports.push(r);
            }
            let all = reports.iter().all(|r| r.all_pass);
            let passed = reports.iter().filter(|r| r.all_pass).count();
            let s = match ctx.format {
                Format::Json => json_doc("verification", json!({ "all_pass": all, "reports": reports })),
                Format::Csv => render::verification_csv(&reports),
                Format::Text => format!("{passed}/{} configurations pass\n", reports.len()),
            };
            out.write_all(s.as_bytes()).map_err(io)?;
            return Ok(if all { EXIT_OK } else { EXIT_VERIFY_FAILED });
        }
        Command::Canonical { n, d, k } => {
            let c = canonical_series_check(n, d, k).map_err(|e| Failure::usage(e.to_string()))?;
            let s = match ctx.format {
                Format::Json => json_doc("canonical", &c),
                Format::Csv => format!(
                    "n,d,k,partner,holds,shift\n{n},{d},{k},{},{},{}\n",
                    c.partner,
                    c.holds,
                    c.shift.map_or(String::new(), |v| v.to_string())
                ),
                Format::Text => format!(
                    "partner of S_{{{n},{d},{k}}}: t = {}\nseries check: {}{}\n",
                    c.partner,
                    if c.holds { "holds" } else { "fails" },
                    c.shift.map_or(String::new(), |v| format!(", shift {v}"))
                ),
            };
            out.write_all(s.as_bytes()).map_err(io)?;
            return Ok(if c.holds { EXIT_OK } else { EXIT_VERIFY_FAILED });
        }
        Command::Dualcheck { ring, h, faces } => {
            let config = ring.resolve()?;
            if h.len() != config.n() {
                return Err(Failure::usage(format!("h has {} coordinates, expected {}", h.len(), config.n())));
            }
            let c = build_divisor_complex(&h, &config);
            if c.is_void() {
                return Err(Failure::usage(format!("{h} is not in the semigroup; its complex is void")));
            }
            let support = c.vertex_support();
            if support.is_empty() {
                return Err(Failure::usage(format!(
                    "the complex of {h} is {{∅}}; duality needs a nonempty vertex set"
                )));
            }
            let dual = alexander_dual_over(&c, support);
            let hc = reduced_homology(&c, ctx.field);
            let hd = reduced_homology(&dual, ctx.field);
            let v = support.len() as i32;
            let duality = hc.dims().keys().chain(hd.dims().keys()).all(|&k| hc.dim(k) == hd.dim(v - k - 3))
                && (-1..v).all(|k| hc.dim(k) == hd.dim(v - k - 3));
            let involution = alexander_dual_over(&dual, support).face_lists() == c.face_lists();
            let ok = duality && involution;
            let s = match ctx.format {
                Format::Json => {
                    let mut body = json!({
                        "config": config, "h": h, "field": ctx.field,
                        "vertex_support": support.to_vec(),
                        "faces_count": c.num_faces(), "dual_faces_count": dual.num_faces(),
                        "homology": hc, "dual_homology": hd,
                        "duality_holds": duality, "involution_holds": involution,
                    });
                    if faces {
                        body["faces"] = json!(c.face_lists());
                        body["dual_faces"] = json!(dual.face_lists());
                    }
                    json_doc("dualcheck", body)
                }
                Format::Csv => format!(
                    "h,faces,dual_faces,duality,involution\n\"{h}\",{},{},{duality},{involution}\n",
                    c.num_faces(),
                    dual.num_faces()
                ),
                Format::Text => {
                    let mut s = format!(
                        "{config}, h = {h}\ncomplex: {} faces on {} vertices; {}\ndual: {} faces; {}\nduality: {}\ninvolution: {}\n",
                        c.num_faces(),
                        v,
                        profile_text(&hc),
                        dual.num_faces(),
                        profile_text(&hd),
                        if duality { "holds" } else { "FAILS" },
                        if involution { "holds" } else { "FAILS" },
                    );
                    if faces {
                        s.push_str(&format!("faces: {:?}\ndual faces: {:?}\n", c.face_lists(), dual.face_lists()));
                    }
                    s
                }
            };
            out.write_all(s.as_bytes()).map_err(io)?;
            return Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED });
        }
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command, writing
/// primary output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Entry point for the binary.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(std::iter::once("pinched").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn sweep_parsing() {
        let c = parse_sweep("n=2,d=3..7").unwrap();
        assert_eq!(c.len(), (3..=7u32).map(|d| d.div_ceil(2) as usize + 1).sum::<usize>());
        assert_eq!(parse_sweep("n=2,d=6,i=2..3").unwrap().len(), 2);
        let three = parse_sweep("n=3,d=3").unwrap();
        let pinches: Vec<String> = three.iter().map(|c| c.pinch().to_string()).collect();
        assert_eq!(pinches, vec!["(3,0,0)", "(2,1,0)", "(1,1,1)"]);
        assert!(parse_sweep("n=3,d=3,i=1").is_err());
        assert!(parse_sweep("d=7..3").is_err());
        assert!(parse_sweep("q=1").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["gens", "-d", "5"]).0, EXIT_USAGE);
        assert_eq!(call(&["gens", "--m", "2,1", "-d", "4"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["betti", "--m", "1,1"]).0, EXIT_USAGE);
    }

    #[test]
    fn resource_refusal_exits_3() {
        let (code, _, err) = call(&["betti", "--m", "2,1,1"]);
        assert_eq!(code, EXIT_RESOURCE);
        assert!(err.contains("estimated cost"));
    }

    #[test]
    fn member_and_gens() {
        assert_eq!(call(&["member", "--m", "2,1", "--h", "5,1"]).1, "false\n");
        let (code, out, _) = call(&["member", "--m", "3,0", "--h", "4,2", "--bruteforce"]);
        assert_eq!((code, out.as_str()), (0, "true (brute force: true)\n"));
        let (_, out, _) = call(&["gens", "-n", "2", "-d", "3", "--pinch", "3", "--format", "csv"]);
        assert_eq!(out, "2,1\n1,2\n0,3\n");
    }
}
