//! The pattern inventory behind [`identify`](super::identify) and
//! [`normalize`](super::normalize).
//!
//! Each format family carries two regexes: a scanning form used to locate
//! candidate spans inside a sentence, and an anchored form used to decide
//! whether a full surface belongs to the family. Families are ordered;
//! overlapping candidates resolve by longest match, then family order.

use std::sync::LazyLock;

use regex::Regex;

const MONTH: &str = "(?:january|february|march|april|may|june|july|august|september|october|\
november|december|sept|jan|feb|mar|apr|jun|jul|aug|sep|oct|nov|dec)";

/// Optional "the early/late/mid" lead-in. Each word self-anchors so that the
/// group cannot start mid-token.
const QUALIFIER: &str = r"(?:\bthe\s+)?(?:\b(?:early|late|mid)[\s-]+)?";

/// Comma or plain whitespace between date components.
const SEP: &str = r"(?:\s*,\s*|\s+)";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Family {
    IsoDay,
    Slash,
    MonthDayYear,
    DayMonthYear,
    Quarter,
    MonthYear,
    IsoMonth,
    Century,
    Decade,
    SpelledYear,
    BareYear,
    DigitRun,
}

/// Families in match-priority order (ties on span start and length).
pub(crate) const FAMILY_ORDER: &[Family] = &[
    Family::IsoDay,
    Family::Slash,
    Family::MonthDayYear,
    Family::DayMonthYear,
    Family::Quarter,
    Family::MonthYear,
    Family::IsoMonth,
    Family::Century,
    Family::Decade,
    Family::SpelledYear,
    Family::BareYear,
    Family::DigitRun,
];

fn scan_pattern(family: Family) -> String {
    match family {
        Family::IsoDay => r"(?i)\b\d{4}-\d{2}-\d{2}\b".to_string(),
        Family::Slash => r"(?i)\b\d{1,4}/\d{1,2}/\d{1,4}\b".to_string(),
        Family::MonthDayYear => {
            format!(r"(?i)\b{MONTH}\.?\s+\d{{1,2}}(?:st|nd|rd|th)?{SEP}\d{{4}}\b")
        }
        Family::DayMonthYear => {
            format!(r"(?i)\b\d{{1,2}}(?:st|nd|rd|th)?\s+(?:of\s+)?{MONTH}\.?{SEP}\d{{4}}\b")
        }
        Family::Quarter => {
            let ordinal = "(?:first|second|third|fourth|1st|2nd|3rd|4th)";
            format!(r"(?i)\b(?:\d{{4}}\s+(?:{ordinal}\s+quarters?|q[1-4])|q[1-4]\s+\d{{4}})\b")
        }
        Family::MonthYear => format!(r"(?i)\b{MONTH}\.?{SEP}\d{{4}}\b"),
        Family::IsoMonth => r"(?i)\b\d{4}-\d{2}\b".to_string(),
        Family::Century => r"(?i)\b(?:the\s+)?\d{1,2}(?:st|nd|rd|th)\s+century\b".to_string(),
        Family::Decade => {
            let spelled =
                "(?:twenties|thirties|forties|fifties|sixties|seventies|eighties|nineties)";
            // The apostrophe variant cannot take a leading \b (no word
            // character on its left), so every alternative anchors itself.
            format!(
                r"(?i)(?:{QUALIFIER}\b\d{{3}}0'?s\b|{QUALIFIER}'\s?\d0s\b|{QUALIFIER}\b\d0s\b|{QUALIFIER}\b{spelled}\b|\b\d{{3}}[xX]\b)"
            )
        }
        Family::SpelledYear => {
            let words = super::words::NUMBER_WORDS.join("|");
            format!(r"(?i)\b(?:{words})(?:[\s-]+(?:{words}|hundred|thousand|and|oh))*\b")
        }
        Family::BareYear => r"\b[12]\d{3}\b".to_string(),
        Family::DigitRun => r"\b\d{5,}\b".to_string(),
    }
}

pub(crate) struct FamilyRegexes {
    pub(crate) family: Family,
    pub(crate) scan: Regex,
    pub(crate) anchored: Regex,
}

pub(crate) static FAMILIES: LazyLock<Vec<FamilyRegexes>> = LazyLock::new(|| {
    FAMILY_ORDER
        .iter()
        .map(|&family| {
            let scan = scan_pattern(family);
            FamilyRegexes {
                family,
                scan: Regex::new(&scan).expect("scan pattern compiles"),
                anchored: Regex::new(&format!(r"^\s*{scan}\s*$")).expect("anchored compiles"),
            }
        })
        .collect()
});

/// The first family whose anchored pattern covers the whole surface, if any.
pub(crate) fn classify(surface: &str) -> Option<Family> {
    FAMILIES.iter().find(|f| f.anchored.is_match(surface)).map(|f| f.family)
}

/// Extracts the starting year of a decade surface ("1990s", "199X", "'90s").
pub(crate) static DECADE_DIGITS: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"(?i)(?:(\d{3})0'?s\b|(\d{3})[xX]\b|(\d)0s\b)").unwrap());

pub(crate) static SPELLED_DECADE: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(r"(?i)\b(twenties|thirties|forties|fifties|sixties|seventies|eighties|nineties)\b")
        .unwrap()
});

pub(crate) fn month_number(name: &str) -> Option<u32> {
    let lowered = name.trim_end_matches('.').to_lowercase();
    Some(match lowered.as_str() {
        "january" | "jan" => 1,
        "february" | "feb" => 2,
        "march" | "mar" => 3,
        "april" | "apr" => 4,
        "may" => 5,
        "june" | "jun" => 6,
        "july" | "jul" => 7,
        "august" | "aug" => 8,
        "september" | "sept" | "sep" => 9,
        "october" | "oct" => 10,
        "november" | "nov" => 11,
        "december" | "dec" => 12,
        _ => return None,
    })
}

/// Two-digit decades read against the twentieth century: "90s" -> 1990.
pub(crate) fn spelled_decade_start(word: &str) -> Option<u32> {
    Some(match word.to_lowercase().as_str() {
        "twenties" => 1920,
        "thirties" => 1930,
        "forties" => 1940,
        "fifties" => 1950,
        "sixties" => 1960,
        "seventies" => 1970,
        "eighties" => 1980,
        "nineties" => 1990,
        _ => return None,
    })
}
