//! Command-line front end: render triangles, graphs and Pascal triangles,
//! print bases and full enumerations of the symmetry classes, and run the
//! brute-force verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use steinhaus::graph::{self, SteinhausGraph};
use steinhaus::oracle;
use steinhaus::pascal::{self, PascalTriangle};
use steinhaus::seq::BinSeq;
use steinhaus::subspace::{self, SymClass};
use steinhaus::triangle::Triangle;

#[derive(Parser)]
#[command(name = "steinhaus", version, about = "Binary Steinhaus triangles, symmetric subspaces, Steinhaus graphs and generalized Pascal triangles")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderKind {
    /// Steinhaus triangle from its first row
    Triangle,
    /// generalized Pascal triangle from its two sides
    Pascal,
    /// Steinhaus graph edge list from its defining sequence
    Graph,
    /// adjacency matrix of a Steinhaus graph
    Matrix,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Dims,
    Bases,
    Graphs,
    Gensets,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Render an object given by bitstring(s)
    Render {
        #[arg(value_enum)]
        kind: RenderKind,
        /// One bitstring, or two (left right) for pascal
        input: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the closed-form basis of a space
    Basis {
        /// st|hst|rst|dst|dst0|esg|prsg|hpt|rpt|dpt
        #[arg(long)]
        space: String,
        #[arg(long)]
        n: usize,
        /// Comma-separated window offsets l_k for the rotationally
        /// symmetric bases
        #[arg(long)]
        l: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate all members of a space with coordinate labels
    Enum {
        #[arg(long)]
        space: String,
        #[arg(long)]
        n: usize,
    },
    /// Run a brute-force verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Override the size cap of the suite
        #[arg(long)]
        cap: Option<usize>,
    },
}

fn usage_err(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_bits(s: &str) -> Result<BinSeq, String> {
    BinSeq::from_str(s).map_err(|e| e.to_string())
}

/// The ten space names of the command line, grouped by the kind of object.
enum Space {
    Triangle(SymClass),
    Graph { parity_regular: bool },
    Pascal(SymClass),
}

impl Space {
    fn parse(name: &str) -> Option<Space> {
        match name.to_ascii_lowercase().as_str() {
            "st" => Some(Space::Triangle(SymClass::Full)),
            "hst" => Some(Space::Triangle(SymClass::H)),
            "rst" => Some(Space::Triangle(SymClass::R)),
            "dst" => Some(Space::Triangle(SymClass::D)),
            "dst0" => Some(Space::Triangle(SymClass::D0)),
            "esg" => Some(Space::Graph { parity_regular: false }),
            "prsg" => Some(Space::Graph { parity_regular: true }),
            "hpt" => Some(Space::Pascal(SymClass::H)),
            "rpt" => Some(Space::Pascal(SymClass::R)),
            "dpt" => Some(Space::Pascal(SymClass::D)),
            _ => None,
        }
    }
}

fn render(kind: RenderKind, input: &[String], format: Format) -> ExitCode {
    match kind {
        RenderKind::Triangle => {
            let [row] = input else {
                return usage_err("render triangle takes exactly one bitstring");
            };
            let s = match parse_bits(row) {
                Ok(s) => s,
                Err(e) => return usage_err(&e),
            };
            let t = Triangle::from_first_row(s);
            match format {
                Format::Text => print!("{}", t.render()),
                Format::Json => {
                    println!("{}", serde_json::to_string(&t.to_json(true)).unwrap())
                }
            }
        }
        RenderKind::Pascal => {
            let [left, right] = input else {
                return usage_err("render pascal takes two bitstrings: left right");
            };
            let (l, r) = match (parse_bits(left), parse_bits(right)) {
                (Ok(l), Ok(r)) => (l, r),
                (Err(e), _) | (_, Err(e)) => return usage_err(&e),
            };
            let p = match PascalTriangle::from_sides(l, r) {
                Ok(p) => p,
                Err(e) => return usage_err(&e.to_string()),
            };
            match format {
                Format::Text => print!("{}", p.render()),
                Format::Json => {
                    println!("{}", serde_json::to_string(&p.to_json()).unwrap())
                }
            }
        }
        RenderKind::Graph | RenderKind::Matrix => {
            let [seq] = input else {
                return usage_err("render graph/matrix takes exactly one bitstring");
            };
            let s = match parse_bits(seq) {
                Ok(s) => s,
                Err(e) => return usage_err(&e),
            };
            let g = SteinhausGraph::from_seq(s);
            match (kind, format) {
                (RenderKind::Matrix, Format::Text) => {
                    for row in g.adjacency_matrix() {
                        let cells: Vec<String> =
                            row.iter().map(|b| b.to_string()).collect();
                        println!("{}", cells.join(" "));
                    }
                }
                (_, Format::Text) => {
                    for (a, b) in g.edges() {
                        println!("{a} {b}");
                    }
                }
                (_, Format::Json) => {
                    println!("{}", serde_json::to_string(&g.to_json()).unwrap())
                }
            }
        }
    }
    ExitCode::SUCCESS
}

fn parse_l(l: &Option<String>) -> Result<Option<Vec<i64>>, String> {
    match l {
        None => Ok(None),
        Some(text) => text
            .split(',')
            .map(|p| p.trim().parse::<i64>().map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()
            .map(Some),
    }
}

fn print_basis(space: &str, n: usize, l: &Option<String>, format: Format) -> ExitCode {
    let Some(sp) = Space::parse(space) else {
        return usage_err(&format!("unknown space {space:?}"));
    };
    let ls = match parse_l(l) {
        Ok(ls) => ls,
        Err(e) => return usage_err(&format!("bad --l value: {e}")),
    };
    match sp {
        Space::Triangle(cls) => {
            let b = match subspace::basis(cls, n, ls.as_deref()) {
                Ok(b) => b,
                Err(e) => return usage_err(&e.to_string()),
            };
            match format {
                Format::Text => {
                    println!("dim={}", b.dim());
                    for e in &b.elements {
                        println!("{}", e.first_row());
                    }
                }
                Format::Json => {
                    println!("{}", serde_json::to_string(&b.to_json()).unwrap())
                }
            }
        }
        Space::Graph { parity_regular } => {
            let b = if parity_regular {
                graph::basis_prsg(n)
            } else {
                graph::basis_esg(n)
            };
            match format {
                Format::Text => {
                    println!("dim={}", b.len());
                    for g in &b {
                        println!("{}", g.seq());
                    }
                }
                Format::Json => {
                    let elements: Vec<String> =
                        b.iter().map(|g| g.seq().to_string()).collect();
                    println!(
                        "{}",
                        serde_json::json!({"space": space, "n": n, "elements": elements})
                    );
                }
            }
        }
        Space::Pascal(cls) => {
            let b = match pascal::basis_pt(cls, n, ls.as_deref()) {
                Ok(b) => b,
                Err(e) => return usage_err(&e.to_string()),
            };
            match format {
                Format::Text => {
                    println!("dim={}", b.len());
                    for p in &b {
                        println!("{} {}", p.left(), p.right());
                    }
                }
                Format::Json => {
                    let elements: Vec<serde_json::Value> = b
                        .iter()
                        .map(|p| {
                            serde_json::json!({
                                "left": p.left().to_string(),
                                "right": p.right().to_string(),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({"space": space, "n": n, "elements": elements})
                    );
                }
            }
        }
    }
    ExitCode::SUCCESS
}

/// Spans a list of length-`len` generator bitstrings in coordinate order
/// (first generator most significant), yielding (coords, member) lines.
fn span_lines(generators: &[BinSeq], len: usize) -> Result<Vec<(BinSeq, BinSeq)>, String> {
    let m = generators.len();
    if m > subspace::ENUM_DIM_CAP {
        return Err(format!(
            "dimension {m} exceeds the enumeration guard of {}",
            subspace::ENUM_DIM_CAP
        ));
    }
    let mut out = Vec::with_capacity(1usize << m);
    for code in 0u64..(1u64 << m) {
        let mut member = BinSeq::zeros(len);
        for (k, g) in generators.iter().enumerate() {
            if code >> (m - 1 - k) & 1 == 1 {
                member = member.xor(g).expect("equal lengths");
            }
        }
        out.push((subspace::enum_coords(m, code), member));
    }
    Ok(out)
}

fn enumerate(space: &str, n: usize) -> ExitCode {
    let Some(sp) = Space::parse(space) else {
        return usage_err(&format!("unknown space {space:?}"));
    };
    match sp {
        Space::Triangle(cls) => {
            let b = match subspace::basis(cls, n, None) {
                Ok(b) => b,
                Err(e) => return usage_err(&e.to_string()),
            };
            let gens: Vec<BinSeq> =
                b.elements.iter().map(|e| e.first_row().clone()).collect();
            match span_lines(&gens, n) {
                Ok(lines) => {
                    for (coords, row) in lines {
                        println!("coords={coords} first_row={row}");
                    }
                }
                Err(e) => return usage_err(&e),
            }
        }
        Space::Graph { parity_regular } => {
            let b = if parity_regular {
                graph::basis_prsg(n)
            } else {
                graph::basis_esg(n)
            };
            let gens: Vec<BinSeq> = b.iter().map(|g| g.seq().clone()).collect();
            match span_lines(&gens, n - 1) {
                Ok(lines) => {
                    for (coords, seq) in lines {
                        println!("coords={coords} seq={seq}");
                    }
                }
                Err(e) => return usage_err(&e),
            }
        }
        Space::Pascal(cls) => {
            let b = match pascal::basis_pt(cls, n, None) {
                Ok(b) => b,
                Err(e) => return usage_err(&e.to_string()),
            };
            // span through the Steinhaus side and extract, so members stay
            // valid Pascal triangles
            let gens: Vec<BinSeq> = b
                .iter()
                .map(|p| pascal::gamma_inv(p).first_row().clone())
                .collect();
            match span_lines(&gens, 2 * n - 1) {
                Ok(lines) => {
                    for (coords, row) in lines {
                        let p = pascal::gamma(&Triangle::from_first_row(row))
                            .expect("odd size");
                        println!("coords={coords} left={} right={}", p.left(), p.right());
                    }
                }
                Err(e) => return usage_err(&e),
            }
        }
    }
    ExitCode::SUCCESS
}

fn verify(suite: Suite, cap: Option<usize>) -> ExitCode {
    let mut pass = true;
    let mut run = |rep: Result<oracle::Report, steinhaus::Error>| match rep {
        Ok(rep) => {
            for line in &rep.lines {
                println!("{line}");
            }
            pass &= rep.pass;
            true
        }
        Err(e) => {
            eprintln!("error: {e}");
            false
        }
    };
    let dims = |cap: Option<usize>| oracle::verify_dims(cap.unwrap_or(14));
    let graphs = |cap: Option<usize>| oracle::verify_graph_iso(cap.unwrap_or(12));

    let ok = match suite {
        Suite::Dims => run(dims(cap)),
        Suite::Graphs => run(graphs(cap)),
        Suite::Bases => {
            let n_max = cap.unwrap_or(14);
            let mut ok = true;
            for cls in subspace::ALL_CLASSES {
                for n in 0..=n_max {
                    ok &= run(oracle::verify_basis(cls, n));
                }
            }
            ok
        }
        Suite::Gensets => {
            let n_max = cap.unwrap_or(oracle::GENSET_CAP);
            let mut ok = true;
            for n in 1..=n_max {
                match oracle::count_generating_sets(n) {
                    Ok(count) => println!("n={n}: {count}"),
                    Err(e) => {
                        eprintln!("error: {e}");
                        ok = false;
                    }
                }
            }
            ok
        }
        Suite::All => {
            let mut ok = run(dims(None));
            for cls in subspace::ALL_CLASSES {
                for n in 0..=14 {
                    ok &= run(oracle::verify_basis(cls, n));
                }
            }
            ok &= run(graphs(None));
            for n in 1..=oracle::GENSET_CAP {
                match oracle::count_generating_sets(n) {
                    Ok(count) => println!("n={n}: {count}"),
                    Err(e) => {
                        eprintln!("error: {e}");
                        ok = false;
                    }
                }
            }
            ok
        }
    };
    if !ok {
        return ExitCode::from(2);
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Render { kind, input, format } => render(kind, &input, format),
        Cmd::Basis { space, n, l, format } => print_basis(&space, n, &l, format),
        Cmd::Enum { space, n } => enumerate(&space, n),
        Cmd::Verify { suite, cap } => verify(suite, cap),
    }
}
