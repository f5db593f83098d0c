//! A scripted REPL session: `let` bindings, `:mode` / `:order` commands
//! and output formats.

use surreal_kernel::cli::repl;
use surreal_kernel::cli::{Format, Session};

const SCRIPT: &str = "\
let x = w^-1
exp(x)
:mode truncated
:order 3
exp(x)
ln(2*w + 1)
:mode exact
g(eps_0 + 3)
member(w^(w^-(w^w)), SRF(eps_0, Nolt(w^w)))
:format signexp
x + 1/2
:format json
w^2*3 - 1/2
";

fn main() {
    let mut session = Session::default();
    let mut format = Format::Text;
    for line in SCRIPT.lines() {
        println!("> {line}");
        let (reply, _) = repl::respond(&mut session, &mut format, line);
        if !reply.is_empty() {
            println!("{reply}");
        }
    }
}
