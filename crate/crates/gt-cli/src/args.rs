//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

#[derive(Debug, Parser)]
#[command(name = "gt", version, about = "Goldman-Turaev brackets, Fox calculus and Drinfeld-Kohno algebras in exact arithmetic")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, Default, Args)]
pub struct GlobalOpts {
    /// Genus of the surface, or of the Drinfeld-Kohno family
    #[arg(short = 'g', long, global = true)]
    pub genus: Option<usize>,
    /// Number of boundary letters, or of strands for the dk verbs
    #[arg(short = 'n', long, global = true)]
    pub boundaries: Option<usize>,
    /// Truncation degree [default: 4]
    #[arg(short = 'N', long, global = true)]
    pub max_degree: Option<u32>,
    /// `adapted` or `rot:r1,r2,...` [default: adapted]
    #[arg(long, global = true)]
    pub framing: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Degree up to which checks run [default: the truncation degree]
    #[arg(short = 'D', long, global = true)]
    pub check_degree: Option<u32>,
    /// JSON file with any of the keys above; flags take precedence
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Drinfeld-Kohno family: `unframed`, `framed` or `genus:g`
    #[arg(long, global = true)]
    pub family: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Lie bialgebra axioms for ρ_G and q^f
    Bialgebra,
    /// The isomorphism onto the Goldman extension
    Phi,
    /// Closedness of the relative cocycle of (q^f, ρ_G)
    Closed,
    /// Whether the given element is group-like
    Grouplike,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Part {
    /// The algebra itself
    Full,
    /// The presented kernel of deleting the last strand
    K,
    /// The presented kernel of deleting the last two strands
    H,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bracket of two cyclic words
    Bracket {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Cobracket of a cyclic word for the chosen framing
    Cobracket {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Double bracket of two elements
    Doublebracket {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Fox derivative along a generator (or `D`, the sum over all of them)
    FoxEval {
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        generator: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// The framed quasi-derivation applied to an element
    QderEval {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// The element, for `grouplike`
        #[arg(allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Degreewise dimensions of a Drinfeld-Kohno algebra or kernel
    DkDims {
        #[arg(long, value_enum, default_value_t = Part::Full)]
        part: Part,
    },
    /// Partial composition on labelled strands, e.g. `1,2,3 2 4,5`
    DkCompose {
        i_labels: String,
        k: usize,
        /// Comma-separated, possibly empty
        #[arg(default_value = "")]
        j_labels: String,
    },
    /// Same as `verify phi`
    VerifyPhi,
    /// Conjugation by a group-like element as a change of Fox pairing
    Defect {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
}
