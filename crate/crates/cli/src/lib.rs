//! Command line front end for `trigraph`.
//!
//! Every verb reads one graph, either from an edge-list file (`--input`) or
//! from a generator (`--family` with `--t`, `--merge-bias`, `--seed`), and
//! writes a line-oriented `key=value` report. Exit status is 0 on success, 1
//! on a domain error (the error name goes to stderr) and 2 on a usage error.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use trigraph::census::{
    count_induced_cycles, find_hexagon_counterexamples, pentagon_bijection, quadrilateral_bijection,
};
use trigraph::generators::{
    friendship, paley9, random_locally_linear, random_triangular_cactus, triangular_snake,
};
use trigraph::graph::{parse_edge_list, to_dot, to_edge_list};
use trigraph::reconstruct::{reconstruct_base, roundtrip_check};
use trigraph::spectral::roots::{decimal_spectrum, factored_display};
use trigraph::spectral::{
    adjacency, charpoly_exact, half_laplacian_like, poly_shift, verify_theorem1,
};
use trigraph::{check_locally_linear, star_graph, Graph, IntPolynomial, Polynomial};

#[derive(Debug, Parser)]
#[command(
    name = "trigraph",
    version,
    about = "Locally linear graphs and their triangle graphs"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Check that every edge lies in exactly one triangle.
    Verify(Common),
    /// Triangle graph G* with its triangle table.
    Star(Common),
    /// Characteristic polynomials of A, A+D/2 and A*.
    Charpoly(Common),
    /// Check the identity linking the spectra of G and G*.
    Theorem(Common),
    /// Induced 4-, 5- and 6-cycle counts in G and G*.
    Census(Common),
    /// Treat the input as a triangle graph and rebuild its base graph.
    Reconstruct(Common),
    /// Build G*, rebuild G from it and certify both isomorphisms.
    Roundtrip(Common),
    /// Write the generated graph as an edge list.
    Generate(Common),
    /// Search for the two hexagon counterexamples and write them to the
    /// directory given by --output (default: current directory).
    Hexfix(HexfixArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Paley9,
    Snake,
    Friendship,
    Cactus,
    Random,
}

#[derive(Debug, Args)]
struct Common {
    /// Edge-list file: a header `n m`, then one `u v` pair per line.
    #[arg(long, short)]
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Number of triangles.
    #[arg(long = "t")]
    t: Option<usize>,
    #[arg(long)]
    merge_bias: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Write graphs as Graphviz DOT instead of edge lists.
    #[arg(long)]
    dot: bool,
}

#[derive(Debug, Args)]
struct HexfixArgs {
    #[arg(long, short)]
    output: Option<PathBuf>,
}

const DEFAULT_MERGE_BIAS: f64 = 0.5;

enum Failure {
    Usage(String),
    /// Module error name and message.
    Domain(&'static str, String),
    /// The verb ran but its answer is negative: error name and full report.
    Negative(&'static str, String),
}

impl From<trigraph::Error> for Failure {
    fn from(e: trigraph::Error) -> Self {
        Failure::Domain(e.name(), e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Run one invocation and return its exit status.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let (result, output) = match &cli.verb {
        Verb::Hexfix(a) => (hexfix(a.output.as_deref()), None),
        Verb::Verify(c) => (with_graph(c, verify), c.output.clone()),
        Verb::Star(c) => (with_graph(c, |g| star(g, c.dot)), c.output.clone()),
        Verb::Charpoly(c) => (with_graph(c, charpoly), c.output.clone()),
        Verb::Theorem(c) => (with_graph(c, theorem), c.output.clone()),
        Verb::Census(c) => (with_graph(c, census), c.output.clone()),
        Verb::Reconstruct(c) => (with_graph(c, |h| reconstruct(h, c.dot)), c.output.clone()),
        Verb::Roundtrip(c) => (with_graph(c, roundtrip), c.output.clone()),
        Verb::Generate(c) => (generate(c), c.output.clone()),
    };
    let (report, code) = match result {
        Ok(report) => (report, 0),
        Err(Failure::Negative(name, report)) => {
            let _ = writeln!(err, "error: {name}");
            (report, 1)
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
        Err(Failure::Domain(name, msg)) => {
            let _ = writeln!(err, "error: {name}: {msg}");
            return 1;
        }
    };
    match output {
        Some(path) => {
            if let Err(e) = fs::write(&path, report) {
                let _ = writeln!(err, "error: Io: {}: {e}", path.display());
                return 1;
            }
        }
        None => {
            let _ = out.write_all(report.as_bytes());
        }
    }
    code
}

fn load(c: &Common) -> std::result::Result<Graph, Failure> {
    match (&c.input, c.family) {
        (Some(_), Some(_)) => Err(Failure::Usage(
            "give either --input or --family, not both".into(),
        )),
        (None, None) => Err(Failure::Usage(
            "an input is required: --input or --family".into(),
        )),
        (Some(path), None) => {
            if c.t.is_some() || c.merge_bias.is_some() || c.seed.is_some() {
                return Err(Failure::Usage("generator flags need --family".into()));
            }
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Domain("Io", format!("{}: {e}", path.display())))?;
            Ok(parse_edge_list(&text)?)
        }
        (None, Some(family)) => generate_family(family, c),
    }
}

fn generate_family(family: Family, c: &Common) -> std::result::Result<Graph, Failure> {
    let need_t = || {
        c.t.ok_or_else(|| Failure::Usage("--family needs --t".into()))
    };
    let need_seed = || {
        c.seed
            .ok_or_else(|| Failure::Usage("this family needs --seed".into()))
    };
    let unused = |flag: &str, set: bool| {
        if set {
            Err(Failure::Usage(format!(
                "{flag} does not apply to this family"
            )))
        } else {
            Ok(())
        }
    };
    let g = match family {
        Family::Paley9 => {
            unused("--t", c.t.is_some())?;
            unused("--seed", c.seed.is_some())?;
            unused("--merge-bias", c.merge_bias.is_some())?;
            paley9()
        }
        Family::Snake | Family::Friendship => {
            unused("--seed", c.seed.is_some())?;
            unused("--merge-bias", c.merge_bias.is_some())?;
            let t = need_t()?;
            if matches!(family, Family::Snake) {
                triangular_snake(t)?
            } else {
                friendship(t)?
            }
        }
        Family::Cactus => {
            unused("--merge-bias", c.merge_bias.is_some())?;
            random_triangular_cactus(need_t()?, need_seed()?)?
        }
        Family::Random => random_locally_linear(
            need_t()?,
            c.merge_bias.unwrap_or(DEFAULT_MERGE_BIAS),
            need_seed()?,
        )?,
    };
    Ok(g)
}

fn with_graph(c: &Common, f: impl FnOnce(&Graph) -> Outcome) -> Outcome {
    let g = load(c)?;
    f(&g)
}

fn coeffs(p: &IntPolynomial) -> String {
    p.coeffs()
        .iter()
        .map(BigInt::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn push_poly(out: &mut String, key: &str, p: &IntPolynomial) {
    writeln!(out, "{key}.coeffs={}", coeffs(p)).unwrap();
    writeln!(out, "{key}.factored={}", factored_display(p)).unwrap();
    writeln!(out, "{key}.roots={}", decimal_spectrum(p)).unwrap();
}

fn graph_text(g: &Graph, name: &str, dot: bool) -> String {
    if dot {
        to_dot(g, name)
    } else {
        to_edge_list(g)
    }
}

fn verify(g: &Graph) -> Outcome {
    let verdict = check_locally_linear(g);
    match verdict.witness {
        None => Ok("locally-linear: true\n".into()),
        Some(w) => Err(Failure::Negative(
            "NotLocallyLinear",
            format!("locally-linear: false, witness: {w}\n"),
        )),
    }
}

fn star(g: &Graph, dot: bool) -> Outcome {
    let st = star_graph(g)?;
    if dot {
        return Ok(to_dot(&st.star, "star"));
    }
    let mut out = String::new();
    writeln!(out, "n={}", st.source_n).unwrap();
    writeln!(out, "m={}", st.triangles.len()).unwrap();
    for (i, t) in st.triangles.iter().enumerate() {
        let [a, b, c] = t.vertices();
        writeln!(out, "triangle.{i}={a} {b} {c}").unwrap();
    }
    out.push_str(&to_edge_list(&st.star));
    Ok(out)
}

fn charpoly(g: &Graph) -> Outcome {
    let st = star_graph(g)?;
    let mut out = String::new();
    push_poly(&mut out, "A", &charpoly_exact(&adjacency(g)));
    push_poly(&mut out, "A+D/2", &charpoly_exact(&half_laplacian_like(g)?));
    push_poly(&mut out, "A*", &charpoly_exact(&adjacency(&st.star)));
    Ok(out)
}

fn theorem(g: &Graph) -> Outcome {
    let r = verify_theorem1(g)?;
    let x_plus_3 = poly_shift(&Polynomial::monomial(1), 3);
    let shifted = poly_shift(&r.half_poly, 3);
    // (x+3)^(m-n) P_{A+D/2}(x+3), kept polynomial on both branches
    let rhs = if r.m >= r.n {
        &x_plus_3.pow(r.m - r.n) * &shifted
    } else {
        shifted
            .exact_div(&x_plus_3.pow(r.n - r.m))
            .ok_or(Failure::Domain(
                "IdentityFailure",
                "(x+3)^(n-m) does not divide".into(),
            ))?
    };
    let mut out = String::new();
    writeln!(out, "n={}", r.n).unwrap();
    writeln!(out, "m={}", r.m).unwrap();
    writeln!(out, "holds={}", r.holds && rhs == r.star_poly).unwrap();
    push_poly(&mut out, "lhs", &r.star_poly);
    push_poly(&mut out, "rhs", &rhs);
    push_poly(&mut out, "half", &r.half_poly);
    push_poly(&mut out, "half_shifted", &shifted);
    match &r.regular_case {
        Some(reg) => {
            writeln!(out, "regular=true").unwrap();
            writeln!(out, "regular.valency={}", reg.valency).unwrap();
            writeln!(out, "regular.holds={}", reg.alt_holds).unwrap();
        }
        None => writeln!(out, "regular=false").unwrap(),
    }
    if r.holds {
        Ok(out)
    } else {
        Err(Failure::Negative("IdentityFailure", out))
    }
}

fn census(g: &Graph) -> Outcome {
    let st = star_graph(g)?;
    let mut out = String::new();
    for k in [4, 5, 6] {
        let base = count_induced_cycles(g, k)?.len();
        let tri = count_induced_cycles(&st.star, k)?.len();
        writeln!(out, "c{k}.base={base}").unwrap();
        writeln!(out, "c{k}.star={tri}").unwrap();
    }
    writeln!(out, "c4.bijection={}", quadrilateral_bijection(g)?.len()).unwrap();
    writeln!(out, "c5.bijection={}", pentagon_bijection(g)?.len()).unwrap();
    Ok(out)
}

fn reconstruct(h: &Graph, dot: bool) -> Outcome {
    let rec = reconstruct_base(h)?;
    if dot {
        return Ok(to_dot(&rec.base, "base"));
    }
    let mut out = String::new();
    writeln!(out, "n={}", rec.base.vertex_count()).unwrap();
    writeln!(out, "m={}", rec.triangle_of.len()).unwrap();
    for (v, origin) in rec.vertex_origin.iter().enumerate() {
        let list: Vec<String> = origin.iter().map(usize::to_string).collect();
        writeln!(out, "origin.{v}={}", list.join(" ")).unwrap();
    }
    for (x, t) in rec.triangle_of.iter().enumerate() {
        let [a, b, c] = t.vertices();
        writeln!(out, "triangle.{x}={a} {b} {c}").unwrap();
    }
    out.push_str(&to_edge_list(&rec.base));
    Ok(out)
}

fn mapping(m: &[usize]) -> String {
    m.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn roundtrip(g: &Graph) -> Outcome {
    let rt = roundtrip_check(g)?;
    let mut out = String::new();
    writeln!(out, "holds={}", rt.holds).unwrap();
    if let Some(c) = &rt.base_certificate {
        writeln!(out, "base_certificate={}", mapping(&c.mapping)).unwrap();
    }
    if let Some(c) = &rt.star_certificate {
        writeln!(out, "star_certificate={}", mapping(&c.mapping)).unwrap();
    }
    if rt.holds {
        Ok(out)
    } else {
        Err(Failure::Negative("RoundTripFailure", out))
    }
}

fn generate(c: &Common) -> Outcome {
    let family = c
        .family
        .ok_or_else(|| Failure::Usage("generate needs --family".into()))?;
    if c.input.is_some() {
        return Err(Failure::Usage("generate takes no --input".into()));
    }
    let g = generate_family(family, c)?;
    Ok(graph_text(&g, "G", c.dot))
}

fn hexfix(dir: Option<&Path>) -> Outcome {
    let found = find_hexagon_counterexamples()?;
    let dir = dir.unwrap_or(Path::new("."));
    let mut out = String::new();
    for (label, case) in [("forward", &found.forward), ("backward", &found.backward)] {
        let path = dir.join(format!("hexagon_{label}.txt"));
        let text = case.fixture_text(&format!("hexagon_{label}"));
        fs::write(&path, text)
            .map_err(|e| Failure::Domain("Io", format!("{}: {e}", path.display())))?;
        writeln!(out, "{label}.path={}", path.display()).unwrap();
        writeln!(out, "{label}.triangles={}", case.triangles).unwrap();
        writeln!(out, "{label}.merge_bias={}", case.merge_bias).unwrap();
        writeln!(out, "{label}.seed={}", case.seed).unwrap();
        writeln!(out, "{label}.c6_base={}", case.c6_base).unwrap();
        writeln!(out, "{label}.c6_star={}", case.c6_star).unwrap();
    }
    Ok(out)
}
