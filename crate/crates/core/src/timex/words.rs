//! Composition of spelled-out year words into numeric years.
//!
//! Handles the three shapes that show up in prose: paired two-digit halves
//! ("fourteen fifty" -> 1450, "nineteen eighty-four" -> 1984), hundreds
//! ("seventeen hundred and fifty two" -> 1752), and thousands
//! ("two thousand and five" -> 2005).

fn ones(word: &str) -> Option<u32> {
    Some(match word {
        "one" => 1,
        "two" => 2,
        "three" => 3,
        "four" => 4,
        "five" => 5,
        "six" => 6,
        "seven" => 7,
        "eight" => 8,
        "nine" => 9,
        _ => return None,
    })
}

fn teens(word: &str) -> Option<u32> {
    Some(match word {
        "ten" => 10,
        "eleven" => 11,
        "twelve" => 12,
        "thirteen" => 13,
        "fourteen" => 14,
        "fifteen" => 15,
        "sixteen" => 16,
        "seventeen" => 17,
        "eighteen" => 18,
        "nineteen" => 19,
        _ => return None,
    })
}

fn tens(word: &str) -> Option<u32> {
    Some(match word {
        "twenty" => 20,
        "thirty" => 30,
        "forty" => 40,
        "fifty" => 50,
        "sixty" => 60,
        "seventy" => 70,
        "eighty" => 80,
        "ninety" => 90,
        _ => return None,
    })
}

/// Number words recognized by the year grammar, excluding connectives.
pub(crate) const NUMBER_WORDS: &[&str] = &[
    "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten", "eleven",
    "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen", "nineteen",
    "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety",
];

/// A value below 100 built from one or two words ("five", "fifty", "fifty two").
fn compose_small(words: &[&str]) -> Option<u32> {
    match words {
        [w] => ones(w).or_else(|| teens(w)).or_else(|| tens(w)),
        [t, o] => Some(tens(t)? + ones(o)?),
        _ => None,
    }
}

/// A value below 1000, optionally using "hundred" ("seven hundred and two").
fn compose_sub_thousand(words: &[&str]) -> Option<u32> {
    if let Some(pos) = words.iter().position(|w| *w == "hundred") {
        let head = compose_small(&words[..pos])?;
        if head > 9 {
            return None;
        }
        let tail = if words[pos + 1..].is_empty() { 0 } else { compose_small(&words[pos + 1..])? };
        Some(head * 100 + tail)
    } else {
        compose_small(words)
    }
}

/// Composes a spelled-out year literally. Returns `None` when the words do
/// not form one of the supported year shapes.
pub(crate) fn compose_year(surface: &str) -> Option<u32> {
    let lowered = surface.to_lowercase();
    let words: Vec<&str> = lowered
        .split(|c: char| c.is_whitespace() || c == '-')
        .filter(|w| !w.is_empty() && *w != "and")
        .map(|w| if w == "oh" || w == "o" { "zero" } else { w })
        .collect();
    compose_year_words(&words)
}

fn compose_year_words(words: &[&str]) -> Option<u32> {
    if words.is_empty() {
        return None;
    }
    if let Some(pos) = words.iter().position(|w| *w == "thousand") {
        // "two thousand (and) twenty one"
        let head = compose_small(&words[..pos])?;
        let tail =
            if words[pos + 1..].is_empty() { 0 } else { compose_sub_thousand(&words[pos + 1..])? };
        return Some(head * 1000 + tail);
    }
    if words.contains(&"hundred") {
        // "seventeen hundred and fifty two"
        return compose_sub_thousand(words);
    }
    // Paired halves: "fourteen fifty", "nineteen eighty-four", "nineteen oh five".
    let century = teens(words[0]).or_else(|| tens(words[0]))?;
    let rest = &words[1..];
    let tail = match rest {
        [] => return None,
        ["zero"] => 0,
        ["zero", o] => ones(o)?,
        _ => compose_small(rest)?,
    };
    if tail >= 100 {
        return None;
    }
    Some(century * 100 + tail)
}
