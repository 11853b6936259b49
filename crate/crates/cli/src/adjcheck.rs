//! `adjcheck`: decide equality of two 2-cells of the free adjunction.

use homres::freeadj::{classify, parse_word, FreeAdjError, PastingWord};
use serde_json::{json, Value};

use crate::report::{Failure, Report, EXIT_CHECK, EXIT_OK, EXIT_PARSE};

fn describe(text: &str, w: &PastingWord) -> (Value, String) {
    let c = classify(w);
    let json = json!({
        "word": text,
        "source": c.source.to_string(),
        "target": c.target.to_string(),
        "hom": c.tag().as_str(),
        "normal_form": c.normal_form().to_string(),
    });
    (json, format!("{text}: {c}"))
}

fn ill_typed(e: &FreeAdjError, which: &str) -> Report {
    let json = json!({"verdict": "ILL-TYPED", "word": which, "error": e.to_string(), "position": e.position()});
    Report { json, text: format!("ILL-TYPED\n{which}: {e}\n"), code: EXIT_PARSE }
}

pub fn adjcheck(w1: &str, w2: &str) -> Result<Report, Failure> {
    let mut words = Vec::new();
    for (name, text) in [("w1", w1), ("w2", w2)] {
        match parse_word(text) {
            Ok(w) => words.push(w),
            Err(e @ FreeAdjError::Parse { .. }) => return Err(Failure::parse(format!("{name}: {e}"))),
            Err(e) => return Ok(ill_typed(&e, name)),
        }
    }
    let (a, b) = (&words[0], &words[1]);
    if a.source() != b.source() || a.target() != b.target() {
        let e = FreeAdjError::BoundaryMismatch(format!("{} => {} versus {} => {}", a.source(), a.target(), b.source(), b.target()));
        return Ok(ill_typed(&e, "w2"));
    }
    let (ja, ta) = describe(w1, a);
    let (jb, tb) = describe(w2, b);
    let equal = classify(a) == classify(b);
    let verdict = if equal { "EQUAL" } else { "DISTINCT" };
    Ok(Report {
        json: json!({"verdict": verdict, "words": [ja, jb]}),
        text: format!("{verdict}\n{ta}\n{tb}\n"),
        code: if equal { EXIT_OK } else { EXIT_CHECK },
    })
}
