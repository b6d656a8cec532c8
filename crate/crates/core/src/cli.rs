//! The `cubecomp` command line: JSON in, JSON or text out.
//!
//! Exit codes: `0` success, `1` mathematical error (payload names the error
//! variant), `2` usage error.

use crate::base::{BaseElement, BaseField};
use crate::cube::{compose_cubes, identity_cube, phi_prime, psi_prime, reduce_cube, Cube, GammaElement};
use crate::error::Error;
use crate::extension::Extension;
use crate::forms::{compose_forms, phi_map, psi_map, QuadForm};
use crate::ideal::{is_oriented_principal, OrientedIdeal};
use crate::json::{self, ParseError};
use crate::oracle::{class_number_crosscheck, ProductAudit};
use crate::triple::{make_balanced, BalancedTriple};
use crate::verify;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::{Read, Write};

#[derive(Parser, Debug)]
#[command(name = "cubecomp", version, about = "Bhargava cubes, quadratic forms and oriented ideals over Q and Q(sqrt 2)")]
struct Cli {
    /// Base field.
    #[arg(long, global = true, default_value = "Q", value_parser = ["Q", "Q-sqrt2"])]
    field: String,
    /// Discriminant D of the extension, as an integer or {"u": .., "v": ..}.
    #[arg(long, global = true, allow_hyphen_values = true)]
    disc: Option<String>,
    /// Seed for `verify`.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

/// Every subcommand reads its JSON arguments from the command line, or from
/// standard input when none are given (a JSON array for several arguments).
#[derive(Subcommand, Debug)]
enum Command {
    /// The three forms attached to a cube.
    FormsOf { #[arg(allow_hyphen_values = true)] inputs: Vec<String> },
    /// Discriminant of a cube or a form.
    Disc { #[arg(allow_hyphen_values = true)] inputs: Vec<String> },
    /// Reduce a projective cube to (1,0,0,d,0,f,g,h) with a transcript.
    ReduceCube { #[arg(allow_hyphen_values = true)] inputs: Vec<String> },
    /// Act on a cube by {"t1", "t2", "t3", "u"}.
    Act { #[arg(allow_hyphen_values = true)] inputs: Vec<String> },
    /// The identity cube of --disc.
    IdentityCube,
    /// The inverse cube.
    InvertCube { #[arg(allow_hyphen_values = true)] inputs: Vec<String> },
    /// Product of two cubes.
    ComposeCubes { #[arg(allow_hyphen_values = true)] inputs: Vec<String> },
    /// Product of two forms.
    ComposeForms { #[arg(allow_hyphen_values = true)] inputs: Vec<String> },
    /// Oriented ideal of a form.
    Psi { #[arg(allow_hyphen_values = true)] inputs: Vec<String> },
    /// Form of an aligned oriented ideal.
    Phi { #[arg(allow_hyphen_values = true)] inputs: Vec<String> },
    /// Balanced triple of a cube.
    PsiPrime { #[arg(allow_hyphen_values = true)] inputs: Vec<String> },
    /// Cube of a balanced triple.
    PhiPrime { #[arg(allow_hyphen_values = true)] inputs: Vec<String> },
    /// Product of two oriented ideals.
    MulIdeals { #[arg(allow_hyphen_values = true)] inputs: Vec<String> },
    /// Inverse of an oriented ideal.
    InvertIdeal { #[arg(allow_hyphen_values = true)] inputs: Vec<String> },
    /// Decide oriented principality (Q only) and return a generator.
    IsPrincipal { #[arg(allow_hyphen_values = true)] inputs: Vec<String> },
    /// Narrow class group of --disc (Q only) with its composition table.
    Classgroup,
    /// Validate three oriented ideals as a balanced triple.
    MakeBalanced { #[arg(allow_hyphen_values = true)] inputs: Vec<String> },
    /// Run the acceptance suites.
    Verify,
}

enum Failure {
    Usage(String),
    Math(Error),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Math(e)
    }
}

type Outcome = std::result::Result<Output, Failure>;

/// A result in both encodings.
struct Output {
    json: Value,
    pretty: String,
    code: i32,
}

impl Output {
    fn new(json: Value, pretty: impl Into<String>) -> Self {
        Output { json, pretty: pretty.into(), code: 0 }
    }
}

struct Ctx {
    field: BaseField,
    disc: Option<String>,
    raw: Vec<Value>,
}

impl Ctx {
    fn args(&self, n: usize) -> std::result::Result<&[Value], Failure> {
        if self.raw.len() != n {
            return Err(Failure::Usage(format!("expected {n} JSON argument(s), got {}", self.raw.len())));
        }
        Ok(&self.raw)
    }

    fn given_disc(&self) -> std::result::Result<Option<BaseElement>, Failure> {
        let Some(s) = &self.disc else { return Ok(None) };
        let v = serde_json::from_str(s).unwrap_or_else(|_| Value::String(s.clone()));
        Ok(Some(json::element_from_json(self.field, &v)?))
    }

    /// The extension of `--disc`, or of `fallback` when the flag is absent.
    fn ext(&self, fallback: Option<BaseElement>) -> std::result::Result<Extension, Failure> {
        match (self.given_disc()?, fallback) {
            (Some(d), _) | (None, Some(d)) => Ok(Extension::new(d)?),
            (None, None) => Err(Failure::Usage("--disc is required".into())),
        }
    }

    fn cube(&self, v: &Value) -> std::result::Result<Cube, Failure> {
        Ok(json::cube_from_json(self.field, v)?)
    }

    fn form(&self, v: &Value) -> std::result::Result<QuadForm, Failure> {
        Ok(json::form_from_json(self.field, v)?)
    }

    fn ideal(&self, ext: &Extension, v: &Value) -> std::result::Result<OrientedIdeal, Failure> {
        let (a, b, e) = json::ideal_parts_from_json(self.field, v)?;
        Ok(OrientedIdeal::new(ext, a, b, e)?)
    }

    fn triple(&self, ext: &Extension, v: &Value) -> std::result::Result<BalancedTriple, Failure> {
        let [a, b, c] = json::triple_parts_from_json(v)?;
        Ok(BalancedTriple::new(ext, self.ideal(ext, a)?, self.ideal(ext, b)?, self.ideal(ext, c)?)?)
    }
}

fn cube_out(c: &Cube) -> Output {
    Output::new(json::cube_to_json(c), c.pretty())
}

fn form_out(q: &QuadForm) -> Output {
    Output::new(json::form_to_json(q), q.to_string())
}

fn ideal_out(i: &OrientedIdeal) -> Output {
    Output::new(json::ideal_to_json(i), i.to_string())
}

fn triple_out(t: &BalancedTriple) -> Output {
    let lines: Vec<String> = t.ideals().iter().enumerate().map(|(n, i)| format!("I{} = {i}", n + 1)).collect();
    Output::new(json::triple_to_json(t), format!("{}\nwitness u = {}", lines.join("\n"), t.witness_u()))
}

fn execute(command: &Command, ctx: &Ctx, seed: u64) -> Outcome {
    use Command::*;
    Ok(match command {
        FormsOf { .. } => {
            let a = ctx.cube(&ctx.args(1)?[0])?;
            let fs = a.attached_forms();
            let pretty: Vec<String> = fs.iter().enumerate().map(|(i, f)| format!("Q{} = {f}", i + 1)).collect();
            Output::new(json!({"forms": fs.iter().map(json::form_to_json).collect::<Vec<_>>()}), pretty.join("\n"))
        }
        Disc { .. } => {
            let v = &ctx.args(1)?[0];
            let d = if v.get("entries").is_some() { ctx.cube(v)?.disc() } else { ctx.form(v)?.disc() };
            Output::new(json::element_to_json(&d), d.to_string())
        }
        ReduceCube { .. } => {
            let a = ctx.cube(&ctx.args(1)?[0])?;
            let (r, t) = reduce_cube(&a)?;
            let steps: Vec<String> = t.steps.iter().map(|(axis, m)| format!("axis {axis}: {m}")).collect();
            Output::new(
                json!({"cube": json::cube_to_json(&r), "transcript": json::transcript_to_json(&t)}),
                if steps.is_empty() { format!("{}\ntranscript: already reduced", r.pretty()) } else { format!("{}\ntranscript:\n{}", r.pretty(), steps.join("\n")) },
            )
        }
        Act { .. } => {
            let args = ctx.args(2)?;
            let a = ctx.cube(&args[0])?;
            let (t1, t2, t3, u) = json::gamma_from_json(ctx.field, &args[1])?;
            cube_out(&a.act(&GammaElement::new(t1, t2, t3, u)?))
        }
        IdentityCube => {
            ctx.args(0)?;
            cube_out(&identity_cube(&ctx.ext(None)?))
        }
        InvertCube { .. } => cube_out(&ctx.cube(&ctx.args(1)?[0])?.inverse()),
        ComposeCubes { .. } => {
            let args = ctx.args(2)?;
            let (a, b) = (ctx.cube(&args[0])?, ctx.cube(&args[1])?);
            let ext = ctx.ext(Some(a.disc()))?;
            cube_out(&compose_cubes(&ext, &a, &b)?)
        }
        ComposeForms { .. } => {
            let args = ctx.args(2)?;
            let (q1, q2) = (ctx.form(&args[0])?, ctx.form(&args[1])?);
            let ext = ctx.ext(Some(q1.disc()))?;
            form_out(&compose_forms(&ext, &q1, &q2)?)
        }
        Psi { .. } => {
            let q = ctx.form(&ctx.args(1)?[0])?;
            let ext = ctx.ext(Some(q.disc()))?;
            ideal_out(&psi_map(&ext, &q)?)
        }
        Phi { .. } => {
            let ext = ctx.ext(None)?;
            form_out(&phi_map(&ext, &ctx.ideal(&ext, &ctx.args(1)?[0])?)?)
        }
        PsiPrime { .. } => {
            let a = ctx.cube(&ctx.args(1)?[0])?;
            let ext = ctx.ext(Some(a.disc()))?;
            triple_out(&psi_prime(&ext, &a)?)
        }
        PhiPrime { .. } => {
            let ext = ctx.ext(None)?;
            cube_out(&phi_prime(&ext, &ctx.triple(&ext, &ctx.args(1)?[0])?)?)
        }
        MulIdeals { .. } => {
            let ext = ctx.ext(None)?;
            let args = ctx.args(2)?;
            ideal_out(&ctx.ideal(&ext, &args[0])?.mul(&ext, &ctx.ideal(&ext, &args[1])?)?)
        }
        InvertIdeal { .. } => {
            let ext = ctx.ext(None)?;
            ideal_out(&ctx.ideal(&ext, &ctx.args(1)?[0])?.inverse(&ext))
        }
        IsPrincipal { .. } => {
            let ext = ctx.ext(None)?;
            let g = is_oriented_principal(&ext, &ctx.ideal(&ext, &ctx.args(1)?[0])?)?;
            let pretty = match &g {
                Some(g) => format!("principal, generated by {g}"),
                None => "not principal".to_string(),
            };
            Output::new(json!({"principal": g.is_some(), "generator": g.as_ref().map(json::ext_to_json)}), pretty)
        }
        Classgroup => {
            ctx.args(0)?;
            if ctx.field != BaseField::Rational {
                return Err(Failure::Math(Error::UnsupportedBaseField));
            }
            let d = ctx.given_disc()?.ok_or_else(|| Failure::Usage("--disc is required".into()))?;
            let d: i64 = d.u().try_into().map_err(|_| Error::OutOfRange(d.to_string()))?;
            let rep = class_number_crosscheck(d, &mut ProductAudit::new())?;
            let mut pretty = format!("D = {d}, order {}\n", rep.h_composition);
            for (i, c) in rep.classes.iter().enumerate() {
                pretty.push_str(&format!("  [{i}] {c}\n"));
            }
            for row in &rep.table {
                let cells: Vec<String> = row.iter().map(|x| x.map_or("?".into(), |v| v.to_string())).collect();
                pretty.push_str(&format!("  {}\n", cells.join(" ")));
            }
            let mut out = Output::new(serde_json::to_value(&rep).expect("plain data"), pretty.trim_end());
            if !rep.passed() {
                out.code = 1;
            }
            out
        }
        MakeBalanced { .. } => {
            let ext = ctx.ext(None)?;
            let args = ctx.args(3)?;
            let (a, b, c) = (ctx.ideal(&ext, &args[0])?, ctx.ideal(&ext, &args[1])?, ctx.ideal(&ext, &args[2])?);
            triple_out(&make_balanced(&ext, &a, &b, &c)?)
        }
        Verify => {
            ctx.args(0)?;
            let reports = verify::run_all(seed);
            let passed = reports.iter().all(|r| r.passed);
            let pretty: Vec<String> = reports.iter().map(|r| r.line()).collect();
            let mut out = Output::new(json!({"seed": seed, "passed": passed, "criteria": reports}), pretty.join("\n"));
            if !passed {
                out.code = 1;
            }
            out
        }
    })
}

fn inputs(command: &Command) -> &[String] {
    use Command::*;
    match command {
        FormsOf { inputs }
        | Disc { inputs }
        | ReduceCube { inputs }
        | Act { inputs }
        | InvertCube { inputs }
        | ComposeCubes { inputs }
        | ComposeForms { inputs }
        | Psi { inputs }
        | Phi { inputs }
        | PsiPrime { inputs }
        | PhiPrime { inputs }
        | MulIdeals { inputs }
        | InvertIdeal { inputs }
        | IsPrincipal { inputs }
        | MakeBalanced { inputs } => inputs,
        IdentityCube | Classgroup | Verify => &[],
    }
}

fn takes_input(command: &Command) -> bool {
    !matches!(command, Command::IdentityCube | Command::Classgroup | Command::Verify)
}

/// Parses the JSON arguments, or standard input when there are none.
fn read_inputs(command: &Command, stdin: &mut dyn Read) -> std::result::Result<Vec<Value>, Failure> {
    let given = inputs(command);
    if !given.is_empty() {
        return given
            .iter()
            .map(|s| serde_json::from_str(s).map_err(|e| Failure::Usage(format!("invalid JSON argument {s:?}: {e}"))))
            .collect();
    }
    if !takes_input(command) {
        return Ok(vec![]);
    }
    let mut text = String::new();
    stdin.read_to_string(&mut text).map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("invalid JSON on standard input: {e}")))?;
    Ok(match v {
        Value::Array(xs) => xs,
        v => vec![v],
    })
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let field: BaseField = cli.field.parse().expect("restricted by clap");
    let raw = read_inputs(&cli.command, stdin);
    let input_echo = match &raw {
        Ok(v) => Value::Array(v.clone()),
        Err(_) => Value::Array(inputs(&cli.command).iter().map(|s| Value::String(s.clone())).collect()),
    };
    let outcome = raw.and_then(|raw| execute(&cli.command, &Ctx { field, disc: cli.disc.clone(), raw }, cli.seed));
    match outcome {
        Ok(out) => {
            let _ = match cli.format {
                Format::Json if matches!(cli.command, Command::Verify) => {
                    // one JSON line per criterion, then a summary line
                    let mut r = Ok(());
                    for c in out.json["criteria"].as_array().expect("verify output") {
                        r = r.and(writeln!(stdout, "{c}"));
                    }
                    r.and(writeln!(stdout, "{}", json!({"seed": out.json["seed"], "passed": out.json["passed"]})))
                }
                Format::Json => writeln!(stdout, "{}", out.json),
                Format::Pretty => writeln!(stdout, "{}", out.pretty),
            };
            out.code
        }
        Err(f) => {
            let (code, name, message) = match f {
                Failure::Usage(m) => (2, "UsageError".to_string(), m),
                Failure::Math(e) => (1, e.name().to_string(), e.to_string()),
            };
            let payload = json!({"error": name, "message": message, "input": input_echo});
            let _ = match cli.format {
                Format::Json => writeln!(stdout, "{payload}"),
                Format::Pretty => writeln!(stderr, "error: {name}: {message}\ninput: {input_echo}"),
            };
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("cubecomp").chain(args.iter().copied());
        let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
    }

    #[test]
    fn forms_of_worked_example() {
        let (code, out) = call(&["forms-of", "--field", "Q", "--disc", "-4", r#"{"entries":[0,1,1,0,1,0,0,-1]}"#], "");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        for f in v["forms"].as_array().unwrap() {
            assert_eq!(f, &json!({"a": {"u": "1", "v": "0"}, "b": {"u": "0", "v": "0"}, "c": {"u": "1", "v": "0"}}));
        }
        let (_, pretty) = call(&["--format", "pretty", "forms-of", r#"{"entries":[0,1,1,0,1,0,0,-1]}"#], "");
        assert_eq!(pretty.lines().next(), Some("Q1 = 1 x^2 + 0 xy + 1 y^2"));
    }

    #[test]
    fn stdin_and_errors() {
        let (code, out) = call(&["invert-cube"], r#"{"entries":[1,0,0,1,0,1,1,0]}"#);
        assert_eq!(code, 0);
        assert_eq!(json::cube_from_json(BaseField::Rational, &serde_json::from_str(&out).unwrap()).unwrap(), Cube::from_ints(BaseField::Rational, [-1, 0, 0, -1, 0, -1, -1, 0]));
        let (code, out) = call(&["reduce-cube", r#"{"entries":[0,0,0,0,0,0,0,0]}"#], "");
        assert_eq!(code, 1);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["error"], "NotProjective");
        assert_eq!(v["input"][0]["entries"][0], 0);
        let (code, _) = call(&["reduce-cube", "{not json"], "");
        assert_eq!(code, 2);
        let (code, _) = call(&["no-such-command"], "");
        assert_eq!(code, 2);
        let (code, _) = call(&["identity-cube"], "");
        assert_eq!(code, 2);
    }

    #[test]
    fn classgroup_minus_23() {
        let (code, out) = call(&["classgroup", "--field", "Q", "--disc", "-23"], "");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["h_composition"], 3);
        assert_eq!(v["table"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn sqrt2_identity_cube() {
        let (code, out) = call(&["--field", "Q-sqrt2", "--disc", r#"{"u":"-1","v":"2"}"#, "identity-cube"], "");
        assert_eq!(code, 0, "{out}");
        let c = json::cube_from_json(BaseField::Sqrt2, &serde_json::from_str(&out).unwrap()).unwrap();
        let (code, out) = call(&["--field", "Q-sqrt2", "compose-cubes", &json::cube_to_json(&c).to_string(), &json::cube_to_json(&c).to_string()], "");
        assert_eq!(code, 0, "{out}");
    }
}
