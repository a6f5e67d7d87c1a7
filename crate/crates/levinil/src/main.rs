//! Command-line surface for the exact Lie-algebra toolkit.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use levinil::files;
use levinil::fixtures;
use levinil::lie::LieAlgebra;
use levinil::rat::{format_rat, parse_rat, Rat};
use levinil::sl2::Sl2Action;
use levinil::subspace::Subspace;
use levinil::Error;

#[derive(Parser)]
#[command(name = "levinil", version, about = "Exact computations with nilpotent Lie algebras and their Levi extensions")]
struct Cli {
    /// Worker threads for verification sweeps; affects wall time only,
    /// never output.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a free nilpotent Lie algebra on a Hall basis.
    Free {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verification sweeps with localized FAIL lines.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Dimension (and optionally structure) of the derivation algebra.
    Der {
        alg: PathBuf,
        /// Also report closure/solvability/nilpotency of Der.
        #[arg(long)]
        series: bool,
    },
    /// Lower central series, nilindex and type.
    Lcs { alg: PathBuf },
    /// sl2 module computations.
    Sl2 {
        #[command(subcommand)]
        what: Sl2Cmd,
    },
    /// Quotient by an ideal given as a `linmap 1` file whose rows span it.
    Quotient {
        alg: PathBuf,
        ideal: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the Heisenberg algebra h_n as a quotient of the free
    /// metabelian algebra by the symplectic contraction kernel.
    HeisenbergQuotient {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Audit the bundled module-structure table through the Weyl dimension
    /// formula.
    Table1Audit,
    /// Write a bundled algebra (table2 | dl8 | heisenberg N | filiform N |
    /// l0h1), or `table2-act` for the block sl2 action file.
    Fixture {
        name: String,
        arg: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild a 52-dimensional non-quasi-cyclic quotient of the free
    /// 3-nilpotent algebra on an 11-dimensional irreducible module.
    ReconstructNqc {
        /// Graph-ideal scalar (nonzero).
        #[arg(long, default_value = "1")]
        lambda: String,
    },
    /// Localize equivariance violations and emit the unique repairing diff.
    RepairEquivariant {
        alg: PathBuf,
        act: PathBuf,
        /// Write the repaired algebra here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Exhaustive Jacobi sweep over all basis triples.
    Jacobi { alg: PathBuf },
    /// Leibniz check for a linear map given as a `linmap 1` file.
    Derivation { alg: PathBuf, map: PathBuf },
    /// Equivariance of the bracket under an `sl2act 1` action.
    Equivariant { alg: PathBuf, act: PathBuf },
}

#[derive(Subcommand)]
enum Sl2Cmd {
    /// Decompose an action into irreducibles.
    Decompose { act: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Read a file, or stdin when the path is `-` (so fixtures and verifiers
/// compose in shell pipes).
fn read_to_string(path: &PathBuf) -> Result<String, Error> {
    if path.as_os_str() == "-" {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(Error::Io)?;
        return Ok(buf);
    }
    std::fs::read_to_string(path).map_err(Error::Io)
}

fn load_alg(path: &PathBuf) -> Result<LieAlgebra, Error> {
    files::read_lieconst(&read_to_string(path)?)
}

fn load_act(path: &PathBuf) -> Result<Sl2Action, Error> {
    files::read_sl2act(&read_to_string(path)?)
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(Error::Io),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

const PASS: ExitCode = ExitCode::SUCCESS;
const FINDINGS: ExitCode = ExitCode::FAILURE;

fn run(cmd: Cmd) -> Result<ExitCode, Error> {
    match cmd {
        Cmd::Free { d, t, out } => {
            let f = levinil::freenil::free_nilpotent(d, t)?;
            emit(&files::write_lieconst(&f.algebra), &out)?;
            Ok(PASS)
        }
        Cmd::Verify { what } => run_verify(what),
        Cmd::Der { alg, series } => {
            let l = load_alg(&alg)?;
            let der = l.derivation_algebra();
            println!("dim {}", der.len());
            if series {
                let info = levinil::lie::matrix_lie_tests(&der);
                println!("closed {}", info.closed);
                if let Some(s) = info.solvable {
                    println!("solvable {s}");
                }
                if let Some(n) = info.nilpotent {
                    println!("nilpotent {n}");
                }
            }
            Ok(PASS)
        }
        Cmd::Lcs { alg } => {
            let l = load_alg(&alg)?;
            let dims: Vec<String> = l
                .lower_central_series()
                .iter()
                .map(|s| s.dim().to_string())
                .collect();
            println!("lcs {}", dims.join(" "));
            match l.nilindex() {
                Ok(t) => {
                    println!("nilindex {t}");
                    println!("type {}", l.type_of());
                    Ok(PASS)
                }
                Err(_) => {
                    println!("not nilpotent");
                    Ok(FINDINGS)
                }
            }
        }
        Cmd::Sl2 { what } => match what {
            Sl2Cmd::Decompose { act } => {
                let a = load_act(&act)?;
                let dec = a.decompose()?;
                for (n, mult, _) in &dec.summands {
                    println!("V({n}) x {mult}");
                }
                println!("dim {}", dec.dim);
                Ok(PASS)
            }
        },
        Cmd::Quotient { alg, ideal, out } => {
            let l = load_alg(&alg)?;
            let m = files::read_linmap(&read_to_string(&ideal)?)?;
            if m.cols() != l.dim() {
                return Err(Error::Dimension(format!(
                    "ideal rows have length {}, algebra has dim {}",
                    m.cols(),
                    l.dim()
                )));
            }
            let rows = (0..m.rows()).map(|r| m.row_vec(r)).collect();
            let s = Subspace::from_rows(l.dim(), rows);
            let (q, _) = l.quotient(&s)?;
            println!("dim {}", q.dim());
            emit(&files::write_lieconst(&q), &out)?;
            Ok(PASS)
        }
        Cmd::HeisenbergQuotient { n, out } => {
            let r = levinil::levi::heisenberg_quotient(n)?;
            println!("free dim {}", r.free.dim());
            println!("ideal dim {}", r.ideal.dim());
            println!("quotient dim {}", r.quotient.dim());
            println!("center dim {}", r.center_dim);
            println!("derived equals center {}", r.derived_is_center);
            println!("form nondegenerate {}", r.form_nondegenerate);
            println!("symplectic derivations {}", r.symplectic_derivations_ok);
            if let Some(path) = &out {
                let mut q = r.quotient.clone();
                q.set_name(format!("h{n}"));
                std::fs::write(path, files::write_lieconst(&q))?;
            }
            let ok = r.center_dim == 1
                && r.derived_is_center
                && r.form_nondegenerate
                && r.symplectic_derivations_ok;
            Ok(if ok { PASS } else { FINDINGS })
        }
        Cmd::Table1Audit => {
            let lines = levinil::weyl::table1_audit()?;
            let mut ok = true;
            for line in &lines {
                println!("{line}");
                ok &= line.ok();
            }
            Ok(if ok { PASS } else { FINDINGS })
        }
        Cmd::Fixture { name, arg, out } => {
            if name == "table2-act" {
                let act = fixtures::table2_action();
                emit(&files::write_sl2act(&act), &out)?;
                return Ok(PASS);
            }
            let l = fixtures::build(&name, arg)?;
            emit(&files::write_lieconst(&l), &out)?;
            Ok(PASS)
        }
        Cmd::ReconstructNqc { lambda } => run_reconstruct(&lambda),
        Cmd::RepairEquivariant { alg, act, out } => {
            let l = load_alg(&alg)?;
            let a = load_act(&act)?;
            let outcome = levinil::repair::repair_equivariant(&l, &a)?;
            for v in &outcome.violations {
                println!(
                    "FAIL equivariant {} {} {} residual {}",
                    v.sym,
                    v.i + 1,
                    v.j + 1,
                    format_residual(&v.residual)
                );
            }
            for d in &outcome.diff {
                println!(
                    "repair c {} {} {} {} -> {}",
                    d.i + 1,
                    d.j + 1,
                    d.k + 1,
                    format_rat(&d.old),
                    format_rat(&d.new)
                );
            }
            if let Some(path) = &out {
                std::fs::write(path, files::write_lieconst(&outcome.repaired))?;
            }
            Ok(if outcome.violations.is_empty() {
                PASS
            } else {
                FINDINGS
            })
        }
    }
}

fn format_residual(v: &[Rat]) -> String {
    use num_traits::Zero;
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| format!("{}:{}", k + 1, format_rat(c)))
        .collect();
    parts.join(" ")
}

fn run_verify(what: VerifyCmd) -> Result<ExitCode, Error> {
    match what {
        VerifyCmd::Jacobi { alg } => {
            let l = load_alg(&alg)?;
            let bad = l.verify_jacobi();
            let n = l.dim();
            let triples = n * (n - 1) * (n - 2) / 6;
            if bad.is_empty() {
                println!("OK jacobi {triples} triples");
                Ok(PASS)
            } else {
                for v in &bad {
                    println!(
                        "FAIL jacobi {} {} {} residual {}",
                        v.i + 1,
                        v.j + 1,
                        v.k + 1,
                        format_residual(&v.residual)
                    );
                }
                Ok(FINDINGS)
            }
        }
        VerifyCmd::Derivation { alg, map } => {
            let l = load_alg(&alg)?;
            let m = files::read_linmap(&read_to_string(&map)?)?;
            if !m.is_square() || m.rows() != l.dim() {
                return Err(Error::Dimension(format!(
                    "map is {}x{}, algebra has dim {}",
                    m.rows(),
                    m.cols(),
                    l.dim()
                )));
            }
            let bad = l.derivation_residuals(&m);
            if bad.is_empty() {
                println!("OK derivation");
                Ok(PASS)
            } else {
                for (i, j, r) in &bad {
                    println!(
                        "FAIL derivation {} {} residual {}",
                        i + 1,
                        j + 1,
                        format_residual(r)
                    );
                }
                Ok(FINDINGS)
            }
        }
        VerifyCmd::Equivariant { alg, act } => {
            let l = load_alg(&alg)?;
            let a = load_act(&act)?;
            let bad = levinil::sl2::equivariance_violations(&a, &l)?;
            if bad.is_empty() {
                let pairs = l.dim() * (l.dim() - 1) / 2;
                println!("OK equivariant 3 operators {pairs} pairs");
                Ok(PASS)
            } else {
                for v in &bad {
                    println!(
                        "FAIL equivariant {} {} {} residual {}",
                        v.sym,
                        v.i + 1,
                        v.j + 1,
                        format_residual(&v.residual)
                    );
                }
                Ok(FINDINGS)
            }
        }
    }
}

fn run_reconstruct(lambda: &str) -> Result<ExitCode, Error> {
    let lambda = parse_rat(lambda)?;
    let f = levinil::freenil::free_nilpotent(11, 3)?;
    println!("free 11 3 dim {}", f.dim());
    let ext = f.extend_sl2(&Sl2Action::irreducible(10))?;
    let deg2 = f.degree_subspace(2);
    let act2 = ext.restrict(&deg2)?;
    let dec2 = act2.decompose()?;
    let weights2 = dec2.weights();
    let names: Vec<String> = weights2.iter().map(usize::to_string).collect();
    println!("deg2 weights {}", names.join(" "));
    // keep V(18) and V(6) in degree 2: the ideal eats V(10) and V(2)
    let mut extra_p = Subspace::zero(f.dim());
    for w in [10usize, 2] {
        let hw = dec2
            .hw_space(w)
            .ok_or_else(|| Error::Construction(format!("V({w}) missing in degree 2")))?;
        let vec_full = deg2.from_coords(&hw.basis().row_vec(0));
        extra_p = extra_p.sum(&ext.submodule_generated(&[vec_full]))?;
    }
    match levinil::levi::nonhomogeneous_graph_quotient(&f, &ext, 14, &lambda, &extra_p, None) {
        Ok(gq) => {
            println!("graph module dim {}", gq.graph_module.dim());
            println!(
                "ideal dim {} homogeneous {} invariant {}",
                gq.ideal.subspace.dim(),
                gq.ideal.is_homogeneous,
                gq.ideal.is_invariant
            );
            let lcs: Vec<String> = gq
                .quotient
                .lower_central_series()
                .iter()
                .map(|s| s.dim().to_string())
                .collect();
            println!(
                "quotient dim {} type {} lcs {}",
                gq.quotient.dim(),
                gq.quotient.type_of(),
                lcs.join(" ")
            );
            let mut w = gq.weights.clone();
            w.sort_unstable_by(|a, b| b.cmp(a));
            let names: Vec<String> = w.iter().map(usize::to_string).collect();
            println!("quotient weights {}", names.join(" "));
            println!("OK reconstruct-nqc");
            Ok(PASS)
        }
        Err(failure) => {
            println!(
                "FAIL reconstruct-nqc weight {} after {} candidates: {}",
                failure.weight, failure.candidates_tried, failure.reason
            );
            Ok(FINDINGS)
        }
    }
}
