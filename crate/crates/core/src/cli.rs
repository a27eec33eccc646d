//! Command-line front end.
//!
//! Matrices are written row-major as `a,b;c,d`; column `j` is the image of
//! the `j`-th torus generator. Permutations use 1-based cycle notation and
//! Seifert symbols are written `Oo,g;b1/a1,b2/a2`.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{Map, Value};

use crate::bundle::TorusBundle;
use crate::covers::{
    fiber_covers, find_genus_lowering, power_cover, restrict_monodromy, FiberCover,
};
use crate::error::{Error, Result};
use crate::fox::{rank3_certificate, GENERATORS};
use crate::intlat::{Lattice, Mat2};
use crate::permrep::{classify_rep, factor_bundle_rep, omega_rep, BundleRep, Perm, TorusRep};
use crate::seifert::{cyclic_cover, find_lowering, seifert_genus, SeifertSymbol};

#[derive(Parser, Debug)]
#[command(
    name = "torus-bundles",
    version,
    about = "Invariants and coverings of torus bundles"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Heegaard genus of the bundle.
    Genus {
        #[arg(short = 'A', long = "matrix", allow_hyphen_values = true)]
        matrix: String,
    },
    /// First homology and double branched cover data.
    Homology {
        #[arg(short = 'A', long = "matrix", allow_hyphen_values = true)]
        matrix: String,
    },
    /// The n-fold power covering.
    PowerCover {
        #[arg(short = 'A', long = "matrix", allow_hyphen_values = true)]
        matrix: String,
        #[arg(short = 'n', long)]
        sheets: i64,
    },
    /// Coverings of fibers up to a number of sheets.
    FiberCovers {
        #[arg(short = 'A', long = "matrix", allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, default_value_t = 6)]
        max_index: i64,
        /// Keep only covers whose total space has smaller genus.
        #[arg(long)]
        lowering_only: bool,
    },
    /// Lifted monodromy for the lattice spanned by two vectors `p,q;s,r`.
    Restrict {
        #[arg(short = 'A', long = "matrix", allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        basis: String,
    },
    /// The standard transitive representation with image Z_m + Z_n.
    Omega {
        #[arg(short = 'm')]
        m: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'd')]
        d: usize,
        #[arg(long = "i0", default_value_t = 0)]
        i0: usize,
    },
    /// Classify a transitive abelian representation of the torus group.
    ClassifyRep {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        tau: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Split a bundle group representation into power and fiber parts.
    FactorRep {
        #[arg(long)]
        sx: String,
        #[arg(long)]
        sy: String,
        #[arg(long)]
        st: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Rank-three certificate for the bundle with monodromy [[-1,-alpha],[0,-1]].
    FoxCert {
        #[arg(long, allow_hyphen_values = true)]
        alpha: i64,
    },
    /// Cyclic covering of a Seifert manifold.
    SeifertCover {
        #[arg(long, allow_hyphen_values = true)]
        symbol: String,
        #[arg(short = 'n', long)]
        sheets: i64,
        /// Comma-separated residues; searched for when omitted.
        #[arg(long, allow_hyphen_values = true)]
        residues: Option<String>,
    },
    /// Heegaard genus of a Seifert manifold with one exceptional fiber.
    SeifertGenus {
        #[arg(long, allow_hyphen_values = true)]
        symbol: String,
    },
    /// Genus-lowering cyclic cover of a one-fiber Seifert manifold.
    SeifertLower {
        #[arg(long, allow_hyphen_values = true)]
        symbol: String,
    },
}

fn parse_int(tok: &str, whole: &str) -> Result<BigInt> {
    tok.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {tok:?} in {whole:?}")))
}

/// Parses `a,b;c,d` into `[[a, b], [c, d]]`.
pub fn parse_matrix(s: &str) -> Result<Mat2> {
    let rows: Vec<&str> = s.split(';').collect();
    if rows.len() != 2 {
        return Err(Error::Parse(format!("expected two rows in {s:?}")));
    }
    let mut e = Vec::with_capacity(4);
    for row in rows {
        let cells: Vec<&str> = row.split(',').collect();
        if cells.len() != 2 {
            return Err(Error::Parse(format!(
                "expected two entries per row in {s:?}"
            )));
        }
        for c in cells {
            e.push(parse_int(c, s)?);
        }
    }
    let [a, b, c, d]: [BigInt; 4] = e.try_into().expect("four entries");
    Ok(Mat2::new(a, b, c, d))
}

/// Parses cycle notation on `degree` points.
pub fn parse_perm(s: &str, degree: usize) -> Result<Perm> {
    Perm::parse(s, degree)
}

fn max_point(s: &str) -> usize {
    s.split(|c: char| !c.is_ascii_digit())
        .filter_map(|t| t.parse::<usize>().ok())
        .max()
        .unwrap_or(0)
}

fn parse_perms(specs: &[&str], degree: Option<usize>) -> Result<Vec<Perm>> {
    let k = degree.unwrap_or_else(|| specs.iter().map(|s| max_point(s)).max().unwrap_or(0).max(1));
    specs.iter().map(|s| parse_perm(s, k)).collect()
}

fn parse_bundle(s: &str) -> Result<TorusBundle> {
    TorusBundle::new(parse_matrix(s)?)
}

fn parse_symbol(s: &str) -> Result<SeifertSymbol> {
    s.parse()
}

fn num(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

/// Ordered result fields shared by the text and JSON renderings.
struct Report(Map<String, Value>);

impl Report {
    fn new() -> Self {
        Report(Map::new())
    }

    fn set(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.0.insert(key.to_string(), v.into());
        self
    }
}

fn cover_value(c: &FiberCover) -> Value {
    let mut m = Map::new();
    m.insert("sheets".into(), c.sheets().into());
    m.insert("lattice".into(), c.lattice.to_string().into());
    m.insert("lifted".into(), c.lifted.monodromy().to_compact().into());
    m.insert("genus".into(), c.lifted.genus().into());
    Value::Object(m)
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar_text).collect::<Vec<_>>().join(" "),
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k} {}", scalar_text(v)))
            .collect::<Vec<_>>()
            .join(", "),
        other => other.to_string(),
    }
}

fn render_text(r: &Report) -> String {
    let mut out = String::new();
    for (k, v) in &r.0 {
        match v {
            Value::Array(items) if items.iter().any(Value::is_object) => {
                out.push_str(&format!("{k}:\n"));
                for item in items {
                    out.push_str(&format!("  {}\n", scalar_text(item)));
                }
            }
            _ => out.push_str(&format!("{k}: {}\n", scalar_text(v))),
        }
    }
    out
}

fn execute(cmd: &Command) -> Result<Report> {
    Ok(match cmd {
        Command::Genus { matrix } => {
            let m = parse_bundle(matrix)?;
            let g = m.genus_detail();
            Report::new()
                .set("genus", g.genus)
                .set("family_match", g.direct)
                .set("inverse_family_match", g.via_inverse)
        }
        Command::Homology { matrix } => {
            let m = parse_bundle(matrix)?;
            let h = m.homology();
            Report::new()
                .set("homology", h.to_string())
                .set("free_rank", h.free_rank)
                .set("torsion", h.torsion.iter().map(num).collect::<Vec<_>>())
                .set("double_branched", m.is_double_branched())
                .set(
                    "sakuma_pairs",
                    m.sakuma_pairs()
                        .iter()
                        .map(|(a, b)| format!("{{{a},{b}}}"))
                        .collect::<Vec<_>>(),
                )
        }
        Command::PowerCover { matrix, sheets } => {
            let p = power_cover(&parse_bundle(matrix)?, *sheets)?;
            Report::new()
                .set("sheets", p.sheets)
                .set("monodromy", p.total.monodromy().to_compact())
                .set("genus", p.total.genus())
        }
        Command::FiberCovers {
            matrix,
            max_index,
            lowering_only,
        } => {
            let m = parse_bundle(matrix)?;
            let covers = if *lowering_only {
                find_genus_lowering(&m, *max_index)?
            } else {
                fiber_covers(&m, *max_index)?
            };
            Report::new()
                .set("base_genus", m.genus())
                .set("count", covers.len())
                .set("covers", covers.iter().map(cover_value).collect::<Vec<_>>())
        }
        Command::Restrict { matrix, basis } => {
            let m = parse_bundle(matrix)?;
            let b = parse_matrix(basis)?;
            let small = |x: &BigInt| {
                x.to_i64()
                    .ok_or_else(|| Error::Parse(format!("basis entry {x} too large")))
            };
            let l = Lattice::from_basis(
                [small(&b.e11)?, small(&b.e12)?],
                [small(&b.e21)?, small(&b.e22)?],
            )?;
            let lifted = restrict_monodromy(&m, &l)?;
            Report::new()
                .set("lattice", l.to_string())
                .set("sheets", l.index())
                .set("lifted", lifted.monodromy().to_compact())
                .set("genus", lifted.genus())
        }
        Command::Omega { m, n, d, i0 } => {
            let r = omega_rep(*m, *n, *d, *i0)?;
            Report::new()
                .set("a", r.sigma.to_string())
                .set("b", r.tau.to_string())
        }
        Command::ClassifyRep { sigma, tau, degree } => {
            let ps = parse_perms(&[sigma, tau], *degree)?;
            let [s, t]: [Perm; 2] = ps.try_into().expect("two perms");
            let c = classify_rep(&TorusRep::new(s, t)?)?;
            Report::new()
                .set("m", c.m)
                .set("n", c.n)
                .set("d", c.d)
                .set("rho", c.rho)
                .set("i_zero", c.i0)
                .set("swapped", c.swapped)
                .set("conjugator", c.conjugator.to_string())
        }
        Command::FactorRep { sx, sy, st, degree } => {
            let ps = parse_perms(&[sx, sy, st], *degree)?;
            let [x, y, t]: [Perm; 3] = ps.try_into().expect("three perms");
            let r = BundleRep::new(x, y, t)?;
            let f = factor_bundle_rep(&r)?;
            let blocks: Vec<String> = f
                .blocks
                .iter()
                .map(|b| {
                    let pts: Vec<String> = b.iter().map(|p| (p + 1).to_string()).collect();
                    format!("{{{}}}", pts.join(","))
                })
                .collect();
            Report::new()
                .set("blocks_count", f.m)
                .set("blocks", blocks)
                .set("q_x", f.q_images[0].to_string())
                .set("q_y", f.q_images[1].to_string())
                .set("q_t", f.q_images[2].to_string())
                .set("gamma_degree", f.gamma.degree())
                .set("gamma_x", f.gamma.sx.to_string())
                .set("gamma_y", f.gamma.sy.to_string())
                .set("gamma_t", f.gamma.st.to_string())
                .set("fiber_transitive", f.gamma_fiber_transitive())
        }
        Command::FoxCert { alpha } => {
            let c = rank3_certificate(*alpha)?;
            let mut derivs = Vec::new();
            for (i, row) in c.derivatives.iter().enumerate() {
                for (j, d) in row.iter().enumerate() {
                    derivs.push(format!("d{}/r{} = {d}", GENERATORS[j], i + 1));
                }
            }
            Report::new()
                .set("alpha", c.alpha)
                .set("holds", c.holds())
                .set("relator_values", c.relator_values.to_vec())
                .set(
                    "jacobian_values",
                    c.jacobian_values
                        .iter()
                        .flatten()
                        .copied()
                        .collect::<Vec<_>>(),
                )
                .set("derivatives", derivs)
        }
        Command::SeifertCover {
            symbol,
            sheets,
            residues,
        } => {
            let sym = parse_symbol(symbol)?;
            let r = residues
                .as_deref()
                .map(|s| {
                    s.split(',')
                        .filter(|t| !t.trim().is_empty())
                        .map(|t| {
                            t.trim()
                                .parse::<i64>()
                                .map_err(|_| Error::Parse(format!("bad residue {t:?}")))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .transpose()?;
            let c = cyclic_cover(&sym, *sheets, r.as_deref())?;
            Report::new()
                .set("cover", c.total.to_string())
                .set("sheets", c.sheets)
                .set("residues", c.residues.clone())
        }
        Command::SeifertGenus { symbol } => {
            Report::new().set("genus", seifert_genus(&parse_symbol(symbol)?)?)
        }
        Command::SeifertLower { symbol } => match find_lowering(&parse_symbol(symbol)?)? {
            Some(l) => Report::new()
                .set("cover", l.cover.total.to_string())
                .set("sheets", l.cover.sheets)
                .set("genus_before", l.genus_before)
                .set("genus_after", l.genus_after),
            None => Report::new().set("cover", "none"),
        },
    })
}

/// Runs the command line, writing results to `out` and diagnostics to
/// `err`. Returns the exit status: 0 success, 1 domain error, 2 parse or
/// usage error.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let text = match cli.format {
                Format::Text => render_text(&report),
                Format::Json => format!("{}\n", Value::Object(report.0)),
            };
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if matches!(e, Error::Parse(_)) {
                2
            } else {
                1
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["torus-bundles"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn matrix_parsing() {
        assert_eq!(
            parse_matrix("-1,-1;2,1").unwrap(),
            Mat2::from_i64(-1, -1, 2, 1)
        );
        assert_eq!(parse_matrix(" 1, 0 ; 0, 1 ").unwrap(), Mat2::identity());
        assert!(matches!(parse_matrix("1,2;3"), Err(Error::Parse(_))));
        assert!(matches!(parse_matrix("1,x;3,4"), Err(Error::Parse(_))));
    }

    #[test]
    fn perm_parsing() {
        assert_eq!(parse_perm("(1,2)", 3).unwrap().images(), &[1, 0, 2]);
        assert!(parse_perm("", 4).unwrap().is_identity());
        assert!(parse_perm("(1,1)", 3).is_err());
    }

    #[test]
    fn genus_command() {
        let (code, out) = run_str(&["genus", "-A", "-1,-1;2,1"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("genus: 2\n"));
    }

    #[test]
    fn omega_command() {
        let (code, out) = run_str(&["omega", "-m", "2", "-n", "8", "-d", "4", "--i0", "1"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "a: (1,2,3,4,5,6,7,8)(9,10,11,12,13,14,15,16)\n\
             b: (1,9,3,11,5,13,7,15)(2,10,4,12,6,14,8,16)\n"
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["genus", "-A", "1,2;3"]).0, 2);
        assert_eq!(run_str(&["genus", "-A", "0,1;1,0"]).0, 1);
        assert_eq!(
            run_str(&["restrict", "-A", "1,1;0,1", "--basis", "2,0;0,1"]).0,
            1
        );
        assert_eq!(run_str(&["no-such-command"]).0, 2);
        assert_eq!(run_str(&["fox-cert", "--alpha", "1"]).0, 1);
    }
}
