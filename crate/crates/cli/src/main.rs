//! `quatnull`: exact computations in `H_Q[x]` and `H_Q[x_1, …, x_n]` from
//! the command line.

mod commands;
mod report;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "quatnull",
    version,
    about = "Exact quaternion polynomial toolkit"
)]
struct Cli {
    /// Emit the report as JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Left,
    Right,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a polynomial: `Σ c_k a^k` (left) or `Σ a^k c_k` (right).
    Eval {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        at: String,
        #[arg(long, value_enum, default_value = "left")]
        side: Side,
    },
    /// Conjugacy classes of roots: right roots `p(a) = 0` by default.
    Roots {
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "right")]
        side: Side,
    },
    /// Minimal polynomial of an element over the centralizer of the `--over` set.
    Minpoly {
        #[arg(long)]
        element: String,
        #[arg(long)]
        over: Vec<String>,
        #[arg(long, value_enum, default_value = "left")]
        side: Side,
    },
    /// Wedderburn polynomial of `b` under conjugation by the generators.
    Wedderburn {
        #[arg(long)]
        element: String,
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
    },
    /// Basis of `{r : p(r a r⁻¹) = 0} ∪ {0}` over `C(a)`.
    Espace {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        at: String,
    },
    /// Left independence of `b_1, …, b_n` over `C(a)`.
    Indep {
        #[arg(long)]
        a: String,
        #[arg(long, required = true, value_delimiter = ',')]
        b: Vec<String>,
    },
    /// Degree of `b` over `C(a)` on the given side.
    Degree {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value = "left")]
        side: Side,
    },
    /// Coefficients `a_i` commuting with `b` and annihilating `a` on the right.
    Witness {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Remainder and quotients of a polynomial modulo a point ideal.
    Reduce {
        #[arg(long)]
        poly: String,
        /// Comma-separated coordinates, e.g. `i, 1+i`.
        #[arg(long)]
        point: String,
    },
    /// Common eigenvector of commuting matrices acting on row vectors.
    Eigen {
        /// One per variable; rows separated by `;`, entries by `,`.
        #[arg(long, required = true)]
        matrix: Vec<String>,
        /// Starting vector, comma-separated; defaults to the first unit vector.
        #[arg(long)]
        start: Option<String>,
    },
    /// Search for a certificate `(ap)^N ∈ I + I(ap) + … + I(ap)^N`.
    Rabinowitsch {
        #[arg(long, required = true)]
        ideal: Vec<String>,
        #[arg(long)]
        p: String,
        #[arg(long)]
        a: String,
        #[arg(long = "maxN", default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        degbound: u32,
        /// Number of variables; inferred from the highest `xn` when absent.
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Run every randomized property suite.
    Selfcheck {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Case budget per suite; expensive suites run a fraction of it.
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    let out = commands::dispatch(&cli.command);
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&out.report).expect("report serializes")
        );
    } else {
        print!("{}", out.report.render_text());
    }
    std::process::exit(out.code);
}
