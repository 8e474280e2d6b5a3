//! `harmcodes` command-line front end.
//!
//! Every subcommand produces a [`Report`]: a text rendering, a JSON value and
//! a verdict. Exit status is 0 when the checked statement holds, 1 when it is
//! falsified and 2 for usage or resource errors.

pub mod schema;

use clap::{Args, Parser, Subcommand, ValueEnum};
use harmonic_codes::config::{
    closed_form_determinant, extremal_min_weight_count, generated_by_minimal_weight, integer_roots,
    intersection_system, numerator_polynomial, render_numerator,
};
use harmonic_codes::designs::{
    assmus_mattson_report, extremal_bound, extremal_check, is_design_harmonic, lambda_of, sigma, Design,
};
use harmonic_codes::euclid::{construction_a_theta, express_in_e4_delta};
use harmonic_codes::gf2::{
    catalog_in, parse_generator_matrix, weight_distribution, CodeRecord, CodeSummary, CodeType, LinearCode, Word,
};
use harmonic_codes::hwe::{bachoc_decompose, generalized_macwilliams_check, zonal_weight_enumerator};
use harmonic_codes::poly::gleason::{
    decompose_type_i, decompose_type_ii, gleason_basis, rational_invariance, x2_plus_y2, Group,
};
use harmonic_codes::poly::{macwilliams_transform, text, PolyRecord, RatPoly};
use harmonic_codes::tetrad::{cover_report, tetrad_system, KOCH_LIST};
use harmonic_codes::zonal::ZonalHarmonic;
use harmonic_codes::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use schema::*;
use serde::Serialize;
use std::fmt::Write as _;
use std::path::PathBuf;

pub const EXIT_VERIFIED: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "harmcodes", version, about = "Harmonic weight enumerators of binary codes")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Worker threads for codeword enumeration (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Directory searched for `<name>.txt` before the bundled fixtures.
    #[arg(long, env = "HARMCODES_FIXTURES", global = true)]
    pub fixtures: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct CodeInput {
    /// Bundled code name (e8, g24, qr48, d12, sd24-3d8, ...).
    #[arg(long, visible_alias = "code")]
    pub catalog: Option<String>,

    /// Generator matrix file: header `n k`, then k rows of n bits.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct FixedWord {
    /// Reference word as a bit string, coordinate 0 first.
    #[arg(long)]
    pub cbar: Option<String>,

    /// Reference word as a comma-separated support.
    #[arg(long, value_delimiter = ',')]
    pub support: Option<Vec<usize>>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    #[command(subcommand)]
    Code(CodeCmd),
    /// Compare the MacWilliams transform of W_C with the enumerated W_{C⊥}.
    Macwilliams {
        #[command(flatten)]
        input: CodeInput,
    },
    #[command(subcommand)]
    Hwe(HweCmd),
    #[command(subcommand)]
    Design(DesignCmd),
    #[command(subcommand)]
    Tetrad(TetradCmd),
    #[command(subcommand)]
    Config(ConfigCmd),
    #[command(subcommand)]
    Gleason(GleasonCmd),
    /// Theta series of the Construction A lattice.
    Theta {
        #[command(flatten)]
        input: CodeInput,
        #[arg(long, default_value_t = 8)]
        order: usize,
        /// Also express the series in E4 and Δ.
        #[arg(long)]
        decompose: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum CodeCmd {
    /// Length, dimension, type, minimum weight and weight enumerator.
    Info {
        #[command(flatten)]
        input: CodeInput,
    },
    /// Generator matrix of the dual code.
    Dual {
        #[command(flatten)]
        input: CodeInput,
    },
}

#[derive(Subcommand, Debug)]
pub enum HweCmd {
    /// Zonal harmonic weight enumerator W_{C,Z_d} for a reference word.
    Zonal {
        #[command(flatten)]
        input: CodeInput,
        #[command(flatten)]
        word: FixedWord,
        #[arg(long)]
        degree: usize,
    },
    /// Generalized MacWilliams identity for the zonal harmonic.
    Check {
        #[command(flatten)]
        input: CodeInput,
        #[command(flatten)]
        word: FixedWord,
        #[arg(long)]
        degree: usize,
    },
    /// Decomposition of the zonal enumerator in the invariant module.
    Bachoc {
        #[command(flatten)]
        input: CodeInput,
        #[command(flatten)]
        word: FixedWord,
        #[arg(long)]
        degree: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum DesignCmd {
    /// Is the weight-w shell a t-design?
    Check {
        #[command(flatten)]
        input: CodeInput,
        #[arg(long)]
        weight: usize,
        #[arg(long)]
        t: usize,
    },
    /// Design strength of every shell of a Type II code.
    Report {
        #[command(flatten)]
        input: CodeInput,
    },
}

#[derive(Subcommand, Debug)]
pub enum TetradCmd {
    /// Tetrad system label of a Type II code of length 24.
    Classify {
        #[command(flatten)]
        input: CodeInput,
    },
    /// Counting and harmonic forms of the coordinate cover condition.
    Cover {
        #[command(flatten)]
        input: CodeInput,
    },
}

#[derive(Subcommand, Debug)]
pub enum ConfigCmd {
    /// Intersection systems, determinants and the integer root scan.
    Verify {
        #[arg(long, value_parser = ["48", "72"])]
        n: String,
        /// Reference weights to build systems for (default: every multiple of 4 in range).
        #[arg(long, value_delimiter = ',')]
        s: Option<Vec<usize>>,
    },
    /// Is the code spanned by its minimal-weight words?
    Generated {
        #[command(flatten)]
        input: CodeInput,
    },
}

#[derive(Subcommand, Debug)]
pub enum GleasonCmd {
    /// The invariant generators and their invariance checks.
    Basis,
    /// Express a weight enumerator in the generators.
    #[command(group = clap::ArgGroup::new("source").required(true))]
    Decompose {
        #[arg(long, visible_alias = "code", group = "source")]
        catalog: Option<String>,
        #[arg(long, group = "source")]
        file: Option<PathBuf>,
        /// Enumerator given directly, e.g. "x^8 + 14x^4y^4 + y^8".
        #[arg(long, group = "source")]
        poly: Option<String>,
    },
}

/// Outcome of a subcommand.
pub struct Report {
    pub text: String,
    pub json: serde_json::Value,
    pub verified: bool,
}

impl Report {
    fn new<T: Serialize>(text: String, value: &T, verified: bool) -> Result<Self> {
        let json = serde_json::to_value(value).map_err(|e| Error::Io(e.to_string()))?;
        Ok(Report { text, json, verified })
    }

    pub fn exit_code(&self) -> i32 {
        if self.verified {
            EXIT_VERIFIED
        } else {
            EXIT_FALSIFIED
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("json value") + "\n",
        }
    }
}

/// Errors that mean the mathematical statement failed rather than the invocation.
pub fn is_falsification(e: &Error) -> bool {
    matches!(e, Error::Residual(_) | Error::NotInvariant(_) | Error::NotDivisible(_) | Error::OutsideKochList(_))
}

struct Ctx {
    fixtures: Option<PathBuf>,
}

impl Ctx {
    fn load(&self, input: &CodeInput) -> Result<LinearCode> {
        match (&input.catalog, &input.file) {
            (Some(name), _) => catalog_in(name, self.fixtures.as_deref()),
            (None, Some(path)) => {
                let text =
                    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                parse_generator_matrix(&text)
            }
            (None, None) => Err(Error::Precondition("need --catalog or --file".into())),
        }
    }
}

fn fixed_word(n: usize, w: &FixedWord) -> Result<Word> {
    let word = match (&w.cbar, &w.support) {
        (Some(bits), _) => bits.parse::<Word>()?,
        (None, Some(support)) => Word::from_support(n, support)?,
        (None, None) => return Err(Error::Precondition("need --cbar or --support".into())),
    };
    if word.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: word.len() });
    }
    Ok(word)
}

fn type_name(t: CodeType) -> &'static str {
    match t {
        CodeType::TypeII => "II",
        CodeType::TypeI => "I",
        CodeType::NotSelfDual => "not-self-dual",
    }
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

pub fn run(cli: &Cli) -> Result<Report> {
    let ctx = Ctx { fixtures: cli.fixtures.clone() };
    match &cli.command {
        Command::Code(CodeCmd::Info { input }) => code_info(&ctx.load(input)?),
        Command::Code(CodeCmd::Dual { input }) => {
            let dual = ctx.load(input)?.dual();
            let rec = CodeRecord::from(&dual);
            let mut text = format!("{} {}\n", rec.length, rec.dimension);
            for g in &rec.generators {
                text.push_str(g);
                text.push('\n');
            }
            Report::new(text, &rec, true)
        }
        Command::Macwilliams { input } => macwilliams(&ctx.load(input)?),
        Command::Hwe(cmd) => hwe(&ctx, cmd),
        Command::Design(DesignCmd::Check { input, weight, t }) => design_check(&ctx.load(input)?, *weight, *t),
        Command::Design(DesignCmd::Report { input }) => design_report(&ctx.load(input)?),
        Command::Tetrad(TetradCmd::Classify { input }) => tetrad_classify(&ctx.load(input)?),
        Command::Tetrad(TetradCmd::Cover { input }) => {
            let r = cover_report(&ctx.load(input)?)?;
            let text = format!(
                "tetrads={} per-coordinate={:?}\ncounting={} harmonic={}\n",
                r.tetrads, r.per_coordinate, r.counting, r.harmonic
            );
            let ok = r.holds();
            Report::new(text, &r, ok)
        }
        Command::Config(ConfigCmd::Verify { n, s }) => config_verify(n.parse().expect("validated by clap"), s.clone()),
        Command::Config(ConfigCmd::Generated { input }) => {
            let r = generated_by_minimal_weight(&ctx.load(input)?)?;
            let text = format!(
                "minwt={} k={} span={} deficit={}\n",
                r.min_weight.map_or("none".to_string(), |m| m.to_string()),
                r.code_dimension,
                r.span_dimension,
                r.deficit()
            );
            let ok = r.generated();
            Report::new(text, &r, ok)
        }
        Command::Gleason(GleasonCmd::Basis) => gleason_basis_report(),
        Command::Gleason(GleasonCmd::Decompose { catalog, file, poly }) => {
            let w = match poly {
                Some(p) => if p.contains('*') { text::parse(p)? } else { text::parse_pretty(p)? },
                None => {
                    let input = CodeInput { catalog: catalog.clone(), file: file.clone() };
                    RatPoly::from_counts(&weight_distribution(&ctx.load(&input)?)?.counts)
                }
            };
            gleason_decompose(&w)
        }
        Command::Theta { input, order, decompose } => theta(&ctx.load(input)?, *order, *decompose),
    }
}

fn code_info(code: &LinearCode) -> Result<Report> {
    let dist = weight_distribution(code)?;
    let w = RatPoly::from_counts(&dist.counts);
    let summary = CodeSummary {
        length: code.length(),
        dimension: code.dimension(),
        code_type: code.classify_type(),
        min_weight: dist.min_weight(),
        distribution: dist,
    };
    let minwt = summary.min_weight.map_or("none".to_string(), |m| m.to_string());
    let text = format!(
        "n={} k={} type={} minwt={}\nW = {}\n",
        summary.length,
        summary.dimension,
        type_name(summary.code_type),
        minwt,
        text::pretty(&w)
    );
    Report::new(text, &CodeInfo { summary, enumerator: text::pretty(&w) }, true)
}

fn macwilliams(code: &LinearCode) -> Result<Report> {
    let w = RatPoly::from_counts(&weight_distribution(code)?.counts);
    let size = BigInt::from(1) << code.dimension();
    let transform = macwilliams_transform(&w, &size)?;
    let dual = RatPoly::from_counts(&weight_distribution(&code.dual())?.counts);
    let diff: Vec<usize> = (0..=w.degree()).filter(|&i| transform.coeff(i) != dual.coeff(i)).collect();
    let holds = diff.is_empty();
    let mut text = format!("transform = {}\ndual      = {}\n", text::pretty(&transform), text::pretty(&dual));
    let _ = writeln!(text, "{}", if holds { "identity holds" } else { "identity FAILS" });
    for i in &diff {
        let _ = writeln!(text, "  y^{i}: {} vs {}", transform.coeff(*i), dual.coeff(*i));
    }
    let out = MacWilliamsOut {
        holds,
        transform: PolyRecord::from(&transform),
        dual_enumerator: PolyRecord::from(&dual),
        diff,
    };
    Report::new(text, &out, holds)
}

fn hwe(ctx: &Ctx, cmd: &HweCmd) -> Result<Report> {
    match cmd {
        HweCmd::Zonal { input, word, degree } => {
            let code = ctx.load(input)?;
            let c = fixed_word(code.length(), word)?;
            let w = zonal_weight_enumerator(&code, &c, *degree)?;
            let text = format!("W_(C,Z_{degree}) = {}\n", text::pretty(&w));
            let out = ZonalOut { degree: *degree, cbar: c.to_string(), enumerator: PolyRecord::from(&w), vanishes: w.is_zero() };
            Report::new(text, &out, true)
        }
        HweCmd::Check { input, word, degree } => {
            let code = ctx.load(input)?;
            let c = fixed_word(code.length(), word)?;
            let q = ZonalHarmonic::new(code.length(), c.weight(), *degree)?.as_discrete_poly(&c)?;
            let r = generalized_macwilliams_check(&code, &q)?;
            let diff = r.diff();
            let mut text = format!("lhs = {}\nrhs = {}\n", text::pretty(&r.lhs), text::pretty(&r.rhs));
            let _ = writeln!(text, "{}", if r.holds { "identity holds" } else { "identity FAILS" });
            for i in &diff {
                let _ = writeln!(text, "  y^{i}: {} vs {}", r.lhs.coeff(*i), r.rhs.coeff(*i));
            }
            let out = HweCheckOut { degree: *degree, cbar: c.to_string(), holds: r.holds, diff };
            Report::new(text, &out, r.holds)
        }
        HweCmd::Bachoc { input, word, degree } => {
            let code = ctx.load(input)?;
            if code.classify_type() != CodeType::TypeII {
                return Err(Error::Precondition("the decomposition needs a Type II code".into()));
            }
            let c = fixed_word(code.length(), word)?;
            let w = zonal_weight_enumerator(&code, &c, *degree)?;
            let b = bachoc_decompose(&w, *degree)?;
            let coefficients = strings(&b.coefficients);
            let text = format!(
                "W/(xy)^{} = psi_{} * sum a_k phi^(p-3k) xi^k\na = [{}]\n",
                b.d,
                b.psi_index,
                coefficients.join(", ")
            );
            let out = BachocOut { degree: b.d, cbar: c.to_string(), psi_index: b.psi_index, coefficients };
            Report::new(text, &out, true)
        }
    }
}

fn design_check(code: &LinearCode, weight: usize, t: usize) -> Result<Report> {
    let design = Design::from_shell(code, weight)?;
    let lambda = lambda_of(&design, t)?;
    let harmonic = is_design_harmonic(&design, t)?;
    let agree = lambda.is_some() == harmonic;
    let blocks = design.blocks().len();
    let n = code.length();
    let text = match lambda {
        Some(l) => format!("{t}-({n},{weight},{l}) design: lambda={l} blocks={blocks} harmonic={harmonic}\n"),
        None => format!("not a {t}-design: blocks={blocks} harmonic={harmonic}\n"),
    };
    let out = DesignCheckOut { weight, t, blocks, lambda, harmonic, agree };
    Report::new(text, &out, lambda.is_some() && agree)
}

fn design_report(code: &LinearCode) -> Result<Report> {
    let shells = assmus_mattson_report(code)?;
    let s = sigma(code.length())?;
    let extremal = extremal_check(code)?;
    let mut text = format!("sigma={s} extremal={extremal} (bound {})\n", extremal_bound(code.length()));
    for r in &shells {
        let extra = r.extra_vanishing_degree.map_or("-".to_string(), |d| d.to_string());
        let _ = writeln!(
            text,
            "  w={:>3} size={:>10} t={} extra-vanishing={}",
            r.weight, r.shell_size, r.verified_t, extra
        );
    }
    // Extremal codes must hold σ-designs on every shell.
    let ok = !extremal || shells.iter().all(|r| r.verified_t >= s.min(r.weight));
    Report::new(text, &DesignReportOut { sigma: s, extremal, shells }, ok)
}

fn tetrad_classify(code: &LinearCode) -> Result<Report> {
    if code.length() != 24 || code.classify_type() != CodeType::TypeII {
        return Err(Error::Precondition("classification needs a Type II code of length 24".into()));
    }
    let system = tetrad_system(code)?;
    let label = system.label();
    let in_koch_list = KOCH_LIST.contains(&label.as_str());
    let components: Vec<ComponentOut> = system
        .components
        .iter()
        .map(|c| ComponentOut {
            label: c.label.name(c.size()),
            size: c.size(),
            tetrads: c.tetrads.len(),
            tetrad_number: c.tetrad_number().to_string(),
        })
        .collect();
    let mut text = format!("label={label} in-koch-list={in_koch_list}\n");
    for c in &components {
        let _ = writeln!(text, "  {} on {} coordinates: {} tetrads, eta={}", c.label, c.size, c.tetrads, c.tetrad_number);
    }
    Report::new(text, &TetradOut { label, in_koch_list, components }, in_koch_list)
}

fn config_verify(n: usize, s: Option<Vec<usize>>) -> Result<Report> {
    let delta = extremal_bound(n);
    let s_values = s.unwrap_or_else(|| ((delta + 1)..=(n - delta)).filter(|s| s % 4 == 0).collect());
    let numerator = numerator_polynomial(n)?;
    let roots = integer_roots(&numerator);
    let a_delta = extremal_min_weight_count(n)?;
    let mut text = format!("n={n} delta={delta} A_delta={a_delta}\n");
    let mut checks = Vec::new();
    for &s in &s_values {
        let sys = intersection_system(n, s)?;
        let closed = closed_form_determinant(n, s as i64)?;
        let matches = sys.determinant == closed;
        let _ = writeln!(text, "s={s}: unknowns N_j for j in {:?}", sys.unknowns);
        for (row, b) in sys.matrix[..sys.square_rows].iter().zip(&sys.rhs) {
            let _ = writeln!(text, "  [{}] | {b}", strings(row).join(", "));
        }
        let _ = writeln!(text, "  det = {} ({})", sys.determinant, if matches { "matches closed form" } else { "MISMATCH" });
        checks.push(DeterminantCheck { s, determinant: sys.determinant.to_string(), closed_form: closed.to_string(), matches });
    }
    let numerator_text = render_numerator(&numerator);
    let _ = writeln!(text, "numerator: {numerator_text}");
    if roots.is_empty() {
        let _ = writeln!(text, "no integer roots");
    } else {
        let _ = writeln!(text, "integer roots: {}", strings(&roots).join(", "));
    }
    let verified = roots.is_empty() && !checks.is_empty() && checks.iter().all(|c| c.matches);
    let out = ConfigVerifyOut {
        n,
        delta,
        a_delta: a_delta.to_string(),
        numerator: numerator_text,
        integer_roots: strings(&roots),
        checks,
        verified,
    };
    Report::new(text, &out, verified)
}

fn gleason_basis_report() -> Result<Report> {
    let b = gleason_basis();
    let psi1_product = &b.psi[2] * &b.psi[3];
    let identities_hold = rational_invariance(&b.phi, Group::GII)
        && rational_invariance(&b.xi, Group::GII)
        && rational_invariance(&x2_plus_y2(), Group::GI)
        && rational_invariance(&b.delta_i, Group::GI)
        && b.psi[1] == psi1_product;
    let out = GleasonBasisOut {
        phi: text::pretty(&b.phi),
        xi: text::pretty(&b.xi),
        delta: text::pretty(&b.delta_i),
        x2_plus_y2: text::pretty(&x2_plus_y2()),
        psi: b.psi.iter().map(text::pretty).collect(),
        identities_hold,
    };
    let mut text = format!("phi = {}\nxi = {}\nx^2 + y^2\ndelta = {}\n", out.phi, out.xi, out.delta);
    for (i, p) in out.psi.iter().enumerate() {
        let _ = writeln!(text, "psi_{i} = {p}");
    }
    let _ = writeln!(text, "invariance and psi_1 = psi_2 psi_3: {identities_hold}");
    Report::new(text, &out, identities_hold)
}

fn gleason_decompose(w: &RatPoly) -> Result<Report> {
    let n = w.degree();
    if n % 8 == 0 && rational_invariance(w, Group::GII) {
        let a = decompose_type_ii(w)?;
        let coefficients = strings(&a);
        let m = n / 8;
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({c}) phi^{} xi^{k}", m - 3 * k))
            .collect();
        let text = format!("W = {}\n", terms.join(" + "));
        return Report::new(text, &GleasonDecomposeOut::TypeII { coefficients }, true);
    }
    let terms = decompose_type_i(w)?;
    let text_terms: Vec<String> = terms
        .iter()
        .filter(|(_, _, c)| !c.is_zero())
        .map(|(a, b, c)| format!("({c}) (x^2+y^2)^{a} delta^{b}"))
        .collect();
    let text = format!("W = {}\n", text_terms.join(" + "));
    let terms = terms
        .into_iter()
        .map(|(a, b, c)| TypeITermOut { a, b, coefficient: c.to_string() })
        .collect();
    Report::new(text, &GleasonDecomposeOut::TypeI { terms }, true)
}

fn theta(code: &LinearCode, order: usize, decompose: bool) -> Result<Report> {
    let series = construction_a_theta(code, order)?;
    let coefficients = series.integral_coefficients().ok().map(|c| strings(&c));
    let quarter: Vec<String> = (0..=4 * order).map(|m| series.coeff_quarter(m).to_string()).collect();
    let mut text = format!("theta = {series}\n");
    let e4_delta = if decompose {
        let a = express_in_e4_delta(&series, code.length())?;
        let _ = writeln!(text, "a (E4^(m-k) Delta^k) = [{}]", strings(&a).join(", "));
        Some(strings(&a))
    } else {
        None
    };
    Report::new(text, &ThetaOut { order, coefficients, quarter_coefficients: quarter, e4_delta }, true)
}

/// Parses argv, runs, prints, and returns the exit status.
pub fn main_with(args: impl IntoIterator<Item = std::ffi::OsString>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_VERIFIED };
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: thread pool: {e}");
            return EXIT_USAGE;
        }
    }
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            if is_falsification(&e) {
                if cli.format == Format::Json {
                    println!("{}", serde_json::json!({ "error": e.to_string(), "falsified": true }));
                }
                EXIT_FALSIFIED
            } else {
                EXIT_USAGE
            }
        }
    }
}
