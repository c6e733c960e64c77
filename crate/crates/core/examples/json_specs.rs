//! Drives the command layer with JSON specifications, as `bck` does.

use cbck::cli::{cmd_check, cmd_duality, cmd_ideals, cmd_spectrum, cmd_tree, Format, Options};

fn main() {
    let json = Options::default();
    let dot = Options { format: Format::Dot, ..Options::default() };
    let union = r#"{"kind":"union","components":[{"kind":"chain","k":2},
        {"kind":"product","components":[{"kind":"chain","k":1},{"kind":"chain","k":1}]}]}"#;
    let h = r#"{"kind":"tree","parents":[null,0,0,2,2],"labels":["λ","α","β","γ","δ"]}"#;

    let runs = [
        ("check", cmd_check(union, &json)),
        ("ideals", cmd_ideals(union, &json)),
        ("spectrum", cmd_spectrum(h, &json)),
        ("tree", cmd_tree(h, &json)),
        ("duality", cmd_duality(r#"{"kind":"divisors","n":36}"#, &json)),
        ("ideals --format dot", cmd_ideals(h, &dot)),
        ("check (bad table)", cmd_check(r#"{"kind":"table","table":[[0,1],[1,0]]}"#, &json)),
    ];
    for (name, out) in runs {
        println!("== {name} (exit {})", out.code as u8);
        print!("{}", out.text);
    }
}
