//! Batch command-line front end.
//!
//! Every command writes deterministic output: identical invocations produce
//! byte-identical stdout. Exit codes: 0 success, 1 domain error, 2 usage
//! error. `POLYFORGE_DIM_CAP` raises or lowers the dimension cap (default 8)
//! for the generic families.

use std::io::Write;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebras::{associator, octonion_table, Octonion, Quaternion};
use crate::constructors::{
    build_with_cap, name_for_symbol, NamedPolytope, PolytopeName, DEFAULT_DIMENSION_CAP,
};
use crate::exactnum::{rat, QuadExt};
use crate::lattice::FaceLattice;
use crate::schlafli::{classify, spherical_catalog, Catalog, SchlafliSymbol, SymbolClass};
use crate::symmetry::{
    automorphism_order_with_cap, binary_icosahedral, binary_tetrahedral, rotation_order_with_cap,
    verify_edge_rule, DEFAULT_AUTOMORPHISM_CAP,
};

pub const DIM_CAP_ENV: &str = "POLYFORGE_DIM_CAP";

#[derive(Parser)]
#[command(
    name = "polyforge",
    about = "Exact construction, verification and classification of regular convex polytopes",
    version,
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a polytope from a name (`cell24`, `simplex 4`) or a symbol ("{3,4,3}")
    Generate {
        /// polytope name tokens or a Schläfli symbol
        #[arg(required = true)]
        target: Vec<String>,
        /// print only the f-vector
        #[arg(long, group = "output")]
        fvector: bool,
        /// print the polytope bundle as JSON
        #[arg(long, group = "output")]
        json: bool,
        /// print the exact vertex coordinates as JSON
        #[arg(long, group = "output")]
        geometry: bool,
        /// add clearly marked decimal approximations
        #[arg(long)]
        approx: bool,
    },
    /// Classify a Schläfli symbol as spherical, euclidean or hyperbolic
    Classify { symbol: String },
    /// Dual lattice of a named polytope or a lattice JSON file
    Dual {
        #[arg(required = true)]
        target: Vec<String>,
    },
    /// Euler characteristics (proper and all-ranks) of a named polytope
    Euler {
        #[arg(required = true)]
        name: Vec<String>,
    },
    /// Number of flags (maximal chains) of a named polytope
    Flags {
        #[arg(required = true)]
        name: Vec<String>,
    },
    /// Isometry and rotation group orders of a named polytope
    GroupOrder {
        #[arg(required = true)]
        name: Vec<String>,
    },
    /// Emit a binary polyhedral group of unit quaternions
    BinaryGroup {
        /// `tetrahedral` or `icosahedral`
        which: String,
        /// emit the group as JSON instead of its order
        #[arg(long)]
        json: bool,
    },
    /// Octonion table (`table`) or division-algebra checks (`check`)
    Algebra { what: String },
    /// Run the invariant suite against one polytope, or `all`
    Verify {
        #[arg(required = true)]
        name: Vec<String>,
    },
    /// The complete list of regular polytopes of one dimension
    Catalog { dim: usize },
}

/// A domain failure: message plus exit code 1.
struct Failure(String);

macro_rules! failure_from {
    ($($ty:ty),* $(,)?) => {$(
        impl From<$ty> for Failure {
            fn from(e: $ty) -> Self {
                Failure(e.to_string())
            }
        }
    )*};
}

failure_from!(
    std::io::Error,
    crate::constructors::ConstructError,
    crate::lattice::LatticeError,
    crate::schlafli::SymbolError,
    crate::symmetry::SymmetryError,
    crate::exactnum::NumError,
);

/// Run the CLI on explicit arguments, writing to the given streams.
/// Returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are successes, everything else is usage
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let stream: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(stream, "{e}");
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure(message)) => {
            let _ = writeln!(err, "error: {message}");
            1
        }
    }
}

fn dimension_cap() -> usize {
    std::env::var(DIM_CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_DIMENSION_CAP)
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Generate {
            target,
            fvector,
            json,
            geometry,
            approx,
        } => {
            let polytope = resolve_target(&target)?;
            if fvector {
                writeln!(out, "{}", polytope.f_vector())?;
            } else if json {
                writeln!(out, "{}", polytope.to_json())?;
            } else if geometry {
                let g = polytope
                    .geometry()
                    .ok_or_else(|| Failure(format!(
                        "no exact geometry available for {}",
                        polytope.name()
                    )))?;
                writeln!(out, "{}", g.to_json())?;
                if approx {
                    for (i, v) in g.vertices().iter().enumerate() {
                        let coords: Vec<String> =
                            v.iter().map(|c| format!("{:.6}", c.to_f64())).collect();
                        writeln!(out, "approx[{i}] = ({})", coords.join(", "))?;
                    }
                }
            } else {
                print_summary(&polytope, approx, out)?;
            }
            Ok(())
        }
        Command::Classify { symbol } => {
            let parsed = SchlafliSymbol::from_str(&symbol)?;
            writeln!(out, "{}", classify(&parsed))?;
            Ok(())
        }
        Command::Dual { target } => {
            let lattice = resolve_lattice(&target)?;
            writeln!(out, "{}", lattice.dual().to_json())?;
            Ok(())
        }
        Command::Euler { name } => {
            let polytope = resolve_target(&name)?;
            writeln!(
                out,
                "euler={} full={}",
                polytope.f_vector().euler_characteristic(),
                polytope.lattice().euler_characteristic_full()
            )?;
            Ok(())
        }
        Command::Flags { name } => {
            let polytope = resolve_target(&name)?;
            writeln!(out, "{}", polytope.lattice().count_flags())?;
            Ok(())
        }
        Command::GroupOrder { name } => {
            let polytope = resolve_target(&name)?;
            let full = automorphism_order_with_cap(polytope.lattice(), DEFAULT_AUTOMORPHISM_CAP)?;
            if polytope.dimension() >= 2 {
                writeln!(out, "isometry={} rotation={}", full, full / 2)?;
            } else {
                writeln!(out, "isometry={full}")?;
            }
            Ok(())
        }
        Command::BinaryGroup { which, json } => {
            let group = match which.as_str() {
                "tetrahedral" => binary_tetrahedral(),
                "icosahedral" => binary_icosahedral(),
                other => {
                    return Err(Failure(format!(
                        "unknown binary group {other:?}; use tetrahedral or icosahedral"
                    )))
                }
            };
            if json {
                writeln!(out, "{}", group.to_json())?;
            } else {
                writeln!(out, "order={}", group.order())?;
            }
            Ok(())
        }
        Command::Algebra { what } => match what.as_str() {
            "table" => {
                let table = octonion_table();
                let rows: Vec<Vec<String>> = (0..8)
                    .map(|i| (0..8).map(|j| table.product(i, j).label()).collect())
                    .collect();
                writeln!(out, "{}", serde_json::to_string(&rows).expect("table JSON"))?;
                Ok(())
            }
            "check" => algebra_check(out),
            other => Err(Failure(format!(
                "unknown algebra command {other:?}; use table or check"
            ))),
        },
        Command::Verify { name } => {
            if name.len() == 1 && name[0] == "all" {
                let mut ok = true;
                for target in standard_names() {
                    ok &= verify_polytope(target, out)?;
                }
                if ok {
                    writeln!(out, "all polytopes verified")?;
                    Ok(())
                } else {
                    Err(Failure("verification failed".into()))
                }
            } else {
                let name = parse_name(&name).ok_or_else(|| unknown_name(&name))?;
                if verify_polytope(name, out)? {
                    Ok(())
                } else {
                    Err(Failure("verification failed".into()))
                }
            }
        }
        Command::Catalog { dim } => {
            match spherical_catalog(dim)? {
                Catalog::InfinitePolygonFamily => {
                    writeln!(out, "{{p}} for every p >= 3")?;
                }
                Catalog::Finite(symbols) => {
                    for s in symbols {
                        writeln!(out, "{s}")?;
                    }
                }
            }
            Ok(())
        }
    }
}

fn print_summary(
    polytope: &NamedPolytope,
    approx: bool,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    writeln!(out, "name: {}", polytope.name())?;
    writeln!(out, "symbol: {}", polytope.symbol())?;
    writeln!(out, "dimension: {}", polytope.dimension())?;
    writeln!(out, "f-vector: {}", polytope.f_vector())?;
    writeln!(
        out,
        "euler: {} (all ranks: {})",
        polytope.f_vector().euler_characteristic(),
        polytope.lattice().euler_characteristic_full()
    )?;
    if let Some(g) = polytope.geometry() {
        writeln!(out, "circumradius^2: {}", g.circumradius_squared())?;
        if approx {
            writeln!(
                out,
                "circumradius^2 approx: {:.6}",
                g.circumradius_squared().to_f64()
            )?;
        }
    }
    Ok(())
}

fn unknown_name(tokens: &[String]) -> Failure {
    Failure(format!(
        "unknown polytope {:?}; expected segment, polygon P, simplex N, hypercube N, \
         cross N, icosahedron, dodecahedron, cell24, cell600 or cell120",
        tokens.join(" ")
    ))
}

/// `["simplex", "4"]` or `["simplex(4)"]` or `["cell24"]` → a name.
fn parse_name(tokens: &[String]) -> Option<PolytopeName> {
    let joined = match tokens.len() {
        1 => tokens[0].clone(),
        2 => format!("{}({})", tokens[0], tokens[1]),
        _ => return None,
    };
    PolytopeName::from_str(&joined).ok()
}

/// Resolve name tokens or a Schläfli symbol to a constructed polytope.
fn resolve_target(tokens: &[String]) -> Result<NamedPolytope, Failure> {
    let cap = dimension_cap();
    if let Some(name) = parse_name(tokens) {
        return Ok(build_with_cap(name, cap)?);
    }
    if tokens.len() == 1 && tokens[0].trim_start().starts_with('{') {
        let symbol = SchlafliSymbol::from_str(&tokens[0])?;
        return match name_for_symbol(&symbol) {
            Some(name) => Ok(build_with_cap(name, cap)?),
            None => Err(Failure(format!(
                "{symbol} is {} and names no regular convex polytope",
                classify(&symbol)
            ))),
        };
    }
    Err(unknown_name(tokens))
}

/// For `dual`: a name, or a path to a lattice JSON file.
fn resolve_lattice(tokens: &[String]) -> Result<FaceLattice, Failure> {
    if let Some(name) = parse_name(tokens) {
        return Ok(build_with_cap(name, dimension_cap())?.lattice().clone());
    }
    if tokens.len() == 1 {
        let path = std::path::Path::new(&tokens[0]);
        if path.exists() {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure(format!("cannot read {}: {e}", tokens[0])))?;
            return Ok(FaceLattice::from_json(&text)?);
        }
        if tokens[0].trim_start().starts_with('{') {
            // allow a symbol here too
            return Ok(resolve_target(tokens)?.lattice().clone());
        }
    }
    Err(unknown_name(tokens))
}

/// The canonical list behind `verify all`.
fn standard_names() -> Vec<PolytopeName> {
    vec![
        PolytopeName::Segment,
        PolytopeName::Polygon(5),
        PolytopeName::Polygon(12),
        PolytopeName::Simplex(3),
        PolytopeName::Simplex(4),
        PolytopeName::Hypercube(3),
        PolytopeName::Hypercube(4),
        PolytopeName::Cross(3),
        PolytopeName::Cross(4),
        PolytopeName::Cross(5),
        PolytopeName::Icosahedron,
        PolytopeName::Dodecahedron,
        PolytopeName::Cell24,
        PolytopeName::Cell600,
        PolytopeName::Cell120,
    ]
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut result = 1u64;
    for i in 0..k {
        result = result * (n - i) / (i + 1);
    }
    result
}

/// Known face counts for every named polytope.
fn expected_f_vector(name: PolytopeName) -> Vec<u64> {
    match name {
        PolytopeName::Segment => vec![2],
        PolytopeName::Polygon(p) => vec![p as u64, p as u64],
        PolytopeName::Simplex(n) => (0..n)
            .map(|k| binomial(n as u64 + 1, k as u64 + 1))
            .collect(),
        PolytopeName::Hypercube(n) => (0..n)
            .map(|k| (1u64 << (n - k)) * binomial(n as u64, k as u64))
            .collect(),
        PolytopeName::Cross(n) => {
            let mut v = expected_f_vector(PolytopeName::Hypercube(n));
            v.reverse();
            v
        }
        PolytopeName::Icosahedron => vec![12, 30, 20],
        PolytopeName::Dodecahedron => vec![20, 30, 12],
        PolytopeName::Cell24 => vec![24, 96, 96, 24],
        PolytopeName::Cell600 => vec![120, 720, 1200, 600],
        PolytopeName::Cell120 => vec![600, 1200, 720, 120],
    }
}

/// Known isometry group orders, where the construction pins one.
fn expected_group_order(name: PolytopeName) -> Option<u64> {
    let factorial = |n: u64| (1..=n).product::<u64>();
    match name {
        PolytopeName::Segment => Some(2),
        PolytopeName::Polygon(p) => Some(2 * p as u64),
        PolytopeName::Simplex(n) => Some(factorial(n as u64 + 1)),
        PolytopeName::Hypercube(n) | PolytopeName::Cross(n) => {
            Some((1u64 << n) * factorial(n as u64))
        }
        PolytopeName::Icosahedron | PolytopeName::Dodecahedron => Some(120),
        PolytopeName::Cell24 => Some(1152),
        // computed, not asserted against a fixed number
        PolytopeName::Cell600 | PolytopeName::Cell120 => None,
    }
}

fn check(
    ok: &mut bool,
    passed: bool,
    label: String,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    *ok &= passed;
    writeln!(out, "{} {}", if passed { "ok  " } else { "FAIL" }, label)?;
    Ok(())
}

/// Run every module invariant that applies to one polytope, printing one
/// ok/FAIL line per check. Returns overall success.
fn verify_polytope(name: PolytopeName, out: &mut dyn Write) -> Result<bool, Failure> {
    let mut ok = true;

    writeln!(out, "== verify {name}")?;
    let polytope = build_with_cap(name, dimension_cap())?;
    let lattice = polytope.lattice();
    let n = lattice.dimension();

    let report = lattice.report();
    check(
        &mut ok,
        report.is_valid(),
        "lattice invariants (gradedness, inclusion, diamond)".to_string(),
        out,
    )?;

    let f = polytope.f_vector();
    let expected = expected_f_vector(name);
    check(
        &mut ok,
        f.counts() == expected.as_slice(),
        format!("f-vector: {f}"),
        out,
    )?;

    let chi = f.euler_characteristic();
    let expected_chi = if n == 0 {
        0
    } else {
        1 + if (n - 1) % 2 == 0 { 1 } else { -1 }
    };
    check(
        &mut ok,
        chi == expected_chi,
        format!("euler characteristic: {chi}"),
        out,
    )?;
    check(
        &mut ok,
        lattice.euler_characteristic_full() == 0,
        "euler characteristic over all ranks: 0".to_string(),
        out,
    )?;

    check(
        &mut ok,
        classify(polytope.symbol()) == SymbolClass::SphericalPolytope,
        format!("symbol {} classifies spherical", polytope.symbol()),
        out,
    )?;

    let dual = lattice.dual();
    check(
        &mut ok,
        dual.f_vector() == f.reversed(),
        "dual reverses the f-vector".to_string(),
        out,
    )?;
    check(
        &mut ok,
        dual.schlafli_symbol()? == polytope.symbol().dual(),
        "dual lattice has the reversed symbol".to_string(),
        out,
    )?;

    if n <= DEFAULT_AUTOMORPHISM_CAP {
        check(
            &mut ok,
            dual.dual().is_isomorphic(lattice),
            "dual of dual is isomorphic to the original".to_string(),
            out,
        )?;

        let flags = lattice.count_flags();
        let order = automorphism_order_with_cap(lattice, DEFAULT_AUTOMORPHISM_CAP)?;
        check(
            &mut ok,
            flags == order,
            format!("flag count {flags} equals automorphism order {order}"),
            out,
        )?;
        if let Some(expected_order) = expected_group_order(name) {
            check(
                &mut ok,
                order == expected_order,
                format!("group order {order} matches the known value"),
                out,
            )?;
        }
        if n >= 2 {
            let rotation = rotation_order_with_cap(lattice, DEFAULT_AUTOMORPHISM_CAP)?;
            check(
                &mut ok,
                2 * rotation == order,
                format!("rotation order {rotation} is half the full order"),
                out,
            )?;
        }
        if n == 3 {
            check(
                &mut ok,
                verify_edge_rule(lattice)?,
                format!("edge rule: rotation order = 2 x {} edges", f.counts()[1]),
                out,
            )?;
        }
    } else {
        writeln!(out, "skip automorphism checks (dimension {n} above cap)")?;
    }

    if let Some(g) = polytope.geometry() {
        check(
            &mut ok,
            g.len() == lattice.num_vertices(),
            "geometry matches the vertex count".to_string(),
            out,
        )?;
        let radius = g.circumradius_squared();
        let centroid = g.centroid();
        let on_sphere = (0..g.len()).all(|i| {
            let mut d = crate::exactnum::QuadExt::zero();
            for (x, c) in g.vertices()[i].iter().zip(&centroid) {
                let diff = x - c;
                d = d + diff.square();
            }
            d == radius
        });
        check(
            &mut ok,
            on_sphere,
            format!("exact circumradius^2 {radius} shared by all vertices"),
            out,
        )?;
        if n >= 2 {
            let mut pairs: Vec<Vec<u32>> = g
                .minimal_distance_pairs()
                .iter()
                .map(|&(i, j)| vec![i, j])
                .collect();
            pairs.sort();
            check(
                &mut ok,
                pairs.as_slice() == lattice.rank_faces(1),
                "minimal-distance pairs are exactly the lattice edges".to_string(),
                out,
            )?;
        }
    }

    Ok(ok)
}

/// Deterministic pseudo-random elements for the division-algebra checks.
struct AlgebraSampler(ChaCha8Rng);

impl AlgebraSampler {
    fn new(seed: u64) -> Self {
        AlgebraSampler(ChaCha8Rng::seed_from_u64(seed))
    }

    fn quad_ext(&mut self) -> QuadExt {
        let part = |rng: &mut ChaCha8Rng| rat(rng.random_range(-9..=9), rng.random_range(1..=4));
        QuadExt::new(part(&mut self.0), part(&mut self.0))
    }

    fn quaternion(&mut self) -> Quaternion {
        Quaternion::new(self.quad_ext(), self.quad_ext(), self.quad_ext(), self.quad_ext())
    }

    fn octonion(&mut self) -> Octonion {
        Octonion::new(std::array::from_fn(|_| {
            rat(self.0.random_range(-9..=9), self.0.random_range(1..=4))
        }))
    }
}

fn algebra_check(out: &mut dyn Write) -> Result<(), Failure> {
    let mut sampler = AlgebraSampler::new(0x5eed);
    let mut ok = true;

    let mut quaternion_norm = true;
    for _ in 0..100 {
        let a = sampler.quaternion();
        let b = sampler.quaternion();
        quaternion_norm &= (&a * &b).norm() == a.norm() * b.norm();
    }
    ok &= quaternion_norm;
    writeln!(
        out,
        "{} quaternion norm multiplicativity (100 random pairs)",
        if quaternion_norm { "ok  " } else { "FAIL" }
    )?;

    let mut octonion_norm = true;
    for _ in 0..100 {
        let a = sampler.octonion();
        let b = sampler.octonion();
        octonion_norm &= (&a * &b).norm() == a.norm() * b.norm();
    }
    ok &= octonion_norm;
    writeln!(
        out,
        "{} octonion norm multiplicativity (100 random pairs)",
        if octonion_norm { "ok  " } else { "FAIL" }
    )?;

    let mut inverse_law = true;
    for _ in 0..50 {
        let q = sampler.quaternion();
        if !q.is_zero() {
            inverse_law &= &q * &q.inverse()? == Quaternion::one();
        }
        let o = sampler.octonion();
        if !o.is_zero() {
            inverse_law &= &o * &o.inverse()? == Octonion::one();
            inverse_law &= &o.inverse()? * &o == Octonion::one();
        }
    }
    ok &= inverse_law;
    writeln!(
        out,
        "{} two-sided inverse law (50 random elements each)",
        if inverse_law { "ok  " } else { "FAIL" }
    )?;

    let e = Octonion::basis;
    let mut expected = Octonion::zero();
    expected.c[7] = rat(-2, 1);
    let witness = associator(&e(1), &e(2), &e(3)) == expected;
    ok &= witness;
    writeln!(
        out,
        "{} associator(e1,e2,e3) = -2*e7",
        if witness { "ok  " } else { "FAIL" }
    )?;

    let units = [
        Quaternion::one(),
        Quaternion::i(),
        Quaternion::j(),
        Quaternion::k(),
    ];
    let mut associative = true;
    for a in &units {
        for b in &units {
            for c in &units {
                associative &= &(a * b) * c == a * &(b * c);
            }
        }
    }
    ok &= associative;
    writeln!(
        out,
        "{} all quaternion basis associators vanish",
        if associative { "ok  " } else { "FAIL" }
    )?;

    if ok {
        writeln!(out, "algebra checks passed")?;
        Ok(())
    } else {
        Err(Failure("algebra checks failed".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors;

    fn run_ok(args: &[&str]) -> String {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv: Vec<String> = std::iter::once("polyforge".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let code = run(&argv, &mut out, &mut err);
        assert_eq!(
            code,
            0,
            "stdout: {}\nstderr: {}",
            String::from_utf8_lossy(&out),
            String::from_utf8_lossy(&err)
        );
        String::from_utf8(out).unwrap()
    }

    fn run_code(args: &[&str]) -> i32 {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv: Vec<String> = std::iter::once("polyforge".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        run(&argv, &mut out, &mut err)
    }

    #[test]
    fn generate_fvector_matches_spec_example() {
        assert_eq!(run_ok(&["generate", "cell24", "--fvector"]), "24 96 96 24\n");
    }

    #[test]
    fn classify_examples() {
        assert_eq!(run_ok(&["classify", "{7,3}"]), "hyperbolic\n");
        assert_eq!(run_ok(&["classify", "{4,4}"]), "euclidean\n");
        assert_eq!(run_ok(&["classify", "{3,5}"]), "spherical\n");
        assert_eq!(run_ok(&["classify", "{5,3,4}"]), "not-recognized\n");
    }

    #[test]
    fn group_order_example() {
        assert_eq!(
            run_ok(&["group-order", "simplex", "3"]),
            "isometry=24 rotation=12\n"
        );
        assert_eq!(run_ok(&["group-order", "segment"]), "isometry=2\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_code(&["no-such-verb"]), 2);
        assert_eq!(run_code(&[]), 2);
        assert_eq!(run_code(&["generate", "hypercube", "99"]), 1);
        assert_eq!(run_code(&["generate", "{4,4}"]), 1);
        assert_eq!(run_code(&["generate", "nonsense"]), 1);
        assert_eq!(run_code(&["classify", "{bad"]), 1);
        assert_eq!(run_code(&["generate", "simplex", "4"]), 0);
    }

    #[test]
    fn generate_accepts_symbols() {
        assert_eq!(run_ok(&["generate", "{3,3,5}", "--fvector"]), "120 720 1200 600\n");
        assert_eq!(run_ok(&["generate", "{4,3}", "--fvector"]), "8 12 6\n");
    }

    #[test]
    fn euler_and_flags() {
        assert_eq!(run_ok(&["euler", "simplex", "4"]), "euler=0 full=0\n");
        assert_eq!(run_ok(&["euler", "icosahedron"]), "euler=2 full=0\n");
        assert_eq!(run_ok(&["flags", "simplex", "3"]), "24\n");
        assert_eq!(run_ok(&["flags", "hypercube", "4"]), "384\n");
    }

    #[test]
    fn binary_group_orders() {
        assert_eq!(run_ok(&["binary-group", "tetrahedral"]), "order=24\n");
        assert_eq!(run_ok(&["binary-group", "icosahedral"]), "order=120\n");
        assert_eq!(run_code(&["binary-group", "octahedral"]), 1);
    }

    #[test]
    fn catalog_output() {
        assert_eq!(
            run_ok(&["catalog", "4"]),
            "{3,3,3}\n{4,3,3}\n{3,3,4}\n{3,4,3}\n{3,3,5}\n{5,3,3}\n"
        );
        assert_eq!(run_ok(&["catalog", "2"]), "{p} for every p >= 3\n");
        assert_eq!(run_ok(&["catalog", "7"]), "{3,3,3,3,3,3}\n{4,3,3,3,3,3}\n{3,3,3,3,3,4}\n");
        assert_eq!(run_code(&["catalog", "0"]), 1);
    }

    #[test]
    fn verify_polygon_12() {
        let output = run_ok(&["verify", "polygon", "12"]);
        assert!(output.contains("f-vector: 12 12"));
        assert!(output.contains("group order 24 matches"));
        assert!(!output.contains("FAIL"));
    }

    #[test]
    fn algebra_table_is_pinned() {
        let output = run_ok(&["algebra", "table"]);
        let rows: Vec<Vec<String>> = serde_json::from_str(output.trim()).unwrap();
        assert_eq!(rows[0][0], "+1");
        assert_eq!(rows[1][2], "+e4");
        assert_eq!(rows[2][1], "-e4");
        assert_eq!(rows[3][3], "-1");
        assert_eq!(rows[1][5], "+e7");
    }

    #[test]
    fn deterministic_output() {
        for args in [
            vec!["generate", "cell24", "--json"],
            vec!["binary-group", "tetrahedral", "--json"],
            vec!["algebra", "table"],
            vec!["generate", "icosahedron", "--geometry", "--approx"],
            vec!["dual", "hypercube", "3"],
        ] {
            assert_eq!(run_ok(&args), run_ok(&args), "{args:?}");
        }
    }

    #[test]
    fn dual_of_file_round_trips() {
        let dir = std::env::temp_dir().join("polyforge-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cube.json");
        let cube = constructors::hypercube(3).unwrap();
        std::fs::write(&path, cube.lattice().to_json()).unwrap();
        let output = run_ok(&["dual", path.to_str().unwrap()]);
        let dual = FaceLattice::from_json(output.trim()).unwrap();
        assert_eq!(dual.f_vector().counts(), &[6, 12, 8]);
    }
}
