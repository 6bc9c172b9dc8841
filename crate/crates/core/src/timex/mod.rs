//! Time-expression identification and TimeML-style normalization.
//!
//! A deterministic pattern grammar stands in for a learned tagger: it scans
//! sentences for date-like surfaces (full dates, month-year, bare years,
//! decades, centuries, spelled-out years, plus the known-bad slash/quarter/
//! digit-run shapes) and [`normalize`] maps each surface to exactly one
//! canonical value or a machine-readable rejection. External tagger output
//! in B/I/O form can be fed through [`filter_tag_sequence`] instead.

mod patterns;
mod words;

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use regex::Regex;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::calendar::{CivilDate, MAX_YEAR};
use patterns::Family;

/// A time expression located in sentence text. Offsets are byte positions
/// into the original sentence, half-open, with `char_start < char_end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTimex {
    pub surface: String,
    pub char_start: usize,
    pub char_end: usize,
}

impl RawTimex {
    /// Wraps an externally supplied surface, spanning the whole string.
    pub fn from_surface(surface: impl Into<String>) -> Self {
        let surface = surface.into();
        let char_end = surface.len();
        Self { surface, char_start: 0, char_end }
    }
}

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum TimexError {
    #[error("month {0} outside [1, 12]")]
    InvalidMonth(u32),
    #[error("year {0} outside supported range for this value kind")]
    InvalidYear(i32),
    #[error("decade start {0} must be a multiple of 10 in [10, 2990]")]
    InvalidDecade(i32),
    #[error("century start {0} must be a multiple of 100 in [100, 2900]")]
    InvalidCentury(i32),
    #[error("{0:?} is not a canonical TimeML value")]
    NotCanonical(String),
}

/// A normalized TimeML-style date value in one of five canonical shapes:
/// "YYYY-MM-DD", "YYYY-MM", "YYYY", "199X" (decade), "17XX" (century).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TimemlValue {
    Day(CivilDate),
    Month { year: i32, month: u32 },
    /// Four-digit year in [1000, 2999].
    Year(i32),
    /// Starting year of the decade, a multiple of 10.
    Decade(i32),
    /// Starting year of the century, a multiple of 100.
    Century(i32),
}

impl TimemlValue {
    pub fn month(year: i32, month: u32) -> Result<Self, TimexError> {
        if !(1..=12).contains(&month) {
            return Err(TimexError::InvalidMonth(month));
        }
        if !(1..=MAX_YEAR).contains(&year) {
            return Err(TimexError::InvalidYear(year));
        }
        Ok(Self::Month { year, month })
    }

    pub fn year(year: i32) -> Result<Self, TimexError> {
        if !(1000..=MAX_YEAR).contains(&year) {
            return Err(TimexError::InvalidYear(year));
        }
        Ok(Self::Year(year))
    }

    pub fn decade(start: i32) -> Result<Self, TimexError> {
        if start % 10 != 0 || !(10..=2990).contains(&start) {
            return Err(TimexError::InvalidDecade(start));
        }
        Ok(Self::Decade(start))
    }

    pub fn century(start: i32) -> Result<Self, TimexError> {
        if start % 100 != 0 || !(100..=2900).contains(&start) {
            return Err(TimexError::InvalidCentury(start));
        }
        Ok(Self::Century(start))
    }
}

impl fmt::Display for TimemlValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Day(d) => write!(f, "{d}"),
            Self::Month { year, month } => write!(f, "{year:04}-{month:02}"),
            Self::Year(y) => write!(f, "{y:04}"),
            Self::Decade(start) => write!(f, "{:03}X", start / 10),
            Self::Century(start) => write!(f, "{:02}XX", start / 100),
        }
    }
}

impl FromStr for TimemlValue {
    type Err = TimexError;

    fn from_str(s: &str) -> Result<Self, TimexError> {
        static SHAPES: LazyLock<[Regex; 5]> = LazyLock::new(|| {
            [
                Regex::new(r"^(\d{4})-(\d{2})-(\d{2})$").unwrap(),
                Regex::new(r"^(\d{4})-(\d{2})$").unwrap(),
                Regex::new(r"^(\d{4})$").unwrap(),
                Regex::new(r"^(\d{3})X$").unwrap(),
                Regex::new(r"^(\d{2})XX$").unwrap(),
            ]
        });
        let not_canonical = || TimexError::NotCanonical(s.to_string());
        if SHAPES[0].is_match(s) {
            let date: CivilDate = s.parse().map_err(|_| not_canonical())?;
            Ok(Self::Day(date))
        } else if let Some(c) = SHAPES[1].captures(s) {
            Self::month(c[1].parse().unwrap(), c[2].parse().unwrap())
        } else if SHAPES[2].is_match(s) {
            Self::year(s.parse().unwrap())
        } else if let Some(c) = SHAPES[3].captures(s) {
            Self::decade(c[1].parse::<i32>().unwrap() * 10)
        } else if let Some(c) = SHAPES[4].captures(s) {
            Self::century(c[1].parse::<i32>().unwrap() * 100)
        } else {
            Err(not_canonical())
        }
    }
}

impl Serialize for TimemlValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TimemlValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Why a surface was filtered out instead of normalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RejectReason {
    #[serde(rename = "ambiguous-order")]
    AmbiguousOrder,
    #[serde(rename = "quarter-format")]
    QuarterFormat,
    #[serde(rename = "not-a-date")]
    NotADate,
    #[serde(rename = "out-of-range")]
    OutOfRange,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let code = match self {
            Self::AmbiguousOrder => "ambiguous-order",
            Self::QuarterFormat => "quarter-format",
            Self::NotADate => "not-a-date",
            Self::OutOfRange => "out-of-range",
        };
        f.write_str(code)
    }
}

/// Result of normalizing one surface: total over all inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    Value(TimemlValue),
    Rejected(RejectReason),
}

impl Normalization {
    pub fn value(&self) -> Option<&TimemlValue> {
        match self {
            Self::Value(v) => Some(v),
            Self::Rejected(_) => None,
        }
    }

    pub fn rejected_reason(&self) -> Option<RejectReason> {
        match self {
            Self::Value(_) => None,
            Self::Rejected(r) => Some(*r),
        }
    }
}

/// B/I/O tag over one token, for interoperating with an external tagger.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TagLabel {
    BTime,
    ITime,
    Outside,
}

/// Keeps only maximal token runs that open with `B-TIME`; runs opening with
/// `I-TIME` are dropped wholesale.
pub fn filter_tag_sequence(tags: &[TagLabel]) -> Vec<(usize, usize)> {
    let mut spans = Vec::new();
    let mut i = 0;
    while i < tags.len() {
        match tags[i] {
            TagLabel::Outside => i += 1,
            TagLabel::BTime => {
                let start = i;
                i += 1;
                while i < tags.len() && tags[i] == TagLabel::ITime {
                    i += 1;
                }
                spans.push((start, i));
            }
            TagLabel::ITime => {
                while i < tags.len() && tags[i] == TagLabel::ITime {
                    i += 1;
                }
            }
        }
    }
    spans
}

/// Scans a sentence for time-expression candidates. Returned spans are
/// pairwise disjoint and ordered by start offset; overlaps resolve to the
/// longest candidate, then to the more specific format family.
pub fn identify(sentence: &str) -> Vec<RawTimex> {
    let mut candidates: Vec<(usize, usize, usize)> = Vec::new();
    for (priority, family) in patterns::FAMILIES.iter().enumerate() {
        for m in family.scan.find_iter(sentence) {
            if family.family == Family::SpelledYear {
                match words::compose_year(m.as_str()) {
                    Some(year) if (1000..=MAX_YEAR as u32).contains(&year) => {}
                    _ => continue,
                }
            }
            candidates.push((m.start(), m.end(), priority));
        }
    }
    candidates.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)).then(a.2.cmp(&b.2)));
    let mut out = Vec::new();
    let mut last_end = 0;
    for (start, end, _) in candidates {
        if start >= last_end {
            out.push(RawTimex {
                surface: sentence[start..end].to_string(),
                char_start: start,
                char_end: end,
            });
            last_end = end;
        }
    }
    out
}

/// Maps a surface to exactly one canonical value or rejection reason.
pub fn normalize(timex: &RawTimex) -> Normalization {
    use Normalization::Rejected;
    use RejectReason::*;

    let surface = timex.surface.trim();
    let Some(family) = patterns::classify(surface) else {
        return Rejected(NotADate);
    };
    match family {
        Family::IsoDay => day_from_parts(surface, '-'),
        Family::IsoMonth => {
            let (y, m) = surface.split_once('-').expect("shape checked");
            month_value(y.parse().unwrap(), m.parse().unwrap())
        }
        Family::Slash => normalize_slash(surface),
        Family::MonthDayYear => {
            let c = MDY_CAPTURE.captures(surface).expect("shape checked");
            let month = patterns::month_number(&c[1]).expect("month alternation");
            day_value(c[3].parse().unwrap(), month, c[2].parse().unwrap())
        }
        Family::DayMonthYear => {
            let c = DMY_CAPTURE.captures(surface).expect("shape checked");
            let month = patterns::month_number(&c[2]).expect("month alternation");
            day_value(c[3].parse().unwrap(), month, c[1].parse().unwrap())
        }
        Family::MonthYear => {
            let c = MY_CAPTURE.captures(surface).expect("shape checked");
            let month = patterns::month_number(&c[1]).expect("month alternation");
            month_value(c[2].parse().unwrap(), month)
        }
        Family::Quarter => Rejected(QuarterFormat),
        Family::Century => {
            let c = CENTURY_CAPTURE.captures(surface).expect("shape checked");
            let nth: i32 = c[1].parse().unwrap();
            match TimemlValue::century((nth - 1) * 100) {
                Ok(v) => Normalization::Value(v),
                Err(_) => Rejected(OutOfRange),
            }
        }
        Family::Decade => normalize_decade(surface),
        Family::SpelledYear => match words::compose_year(surface) {
            Some(year) => match TimemlValue::year(year as i32) {
                Ok(v) => Normalization::Value(v),
                Err(_) => Rejected(OutOfRange),
            },
            None => Rejected(NotADate),
        },
        Family::BareYear => match TimemlValue::year(surface.parse().unwrap()) {
            Ok(v) => Normalization::Value(v),
            Err(_) => Rejected(OutOfRange),
        },
        Family::DigitRun => Rejected(NotADate),
    }
}

static MDY_CAPTURE: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(&format!(
        r"(?i)^({m})\.?\s+(\d{{1,2}})(?:st|nd|rd|th)?{sep}(\d{{4}})$",
        m = patterns::MONTH,
        sep = patterns::SEP
    ))
    .unwrap()
});

static DMY_CAPTURE: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(&format!(
        r"(?i)^(\d{{1,2}})(?:st|nd|rd|th)?\s+(?:of\s+)?({m})\.?{sep}(\d{{4}})$",
        m = patterns::MONTH,
        sep = patterns::SEP
    ))
    .unwrap()
});

static MY_CAPTURE: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(&format!(
        r"(?i)^({m})\.?{sep}(\d{{4}})$",
        m = patterns::MONTH,
        sep = patterns::SEP
    ))
    .unwrap()
});

static CENTURY_CAPTURE: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(r"(?i)^(?:the\s+)?(\d{1,2})(?:st|nd|rd|th)\s+century$").unwrap()
});

fn day_value(year: i32, month: u32, day: u32) -> Normalization {
    match CivilDate::new(year, month, day) {
        Ok(date) => Normalization::Value(TimemlValue::Day(date)),
        Err(_) => Normalization::Rejected(RejectReason::OutOfRange),
    }
}

fn month_value(year: i32, month: u32) -> Normalization {
    match TimemlValue::month(year, month) {
        Ok(v) => Normalization::Value(v),
        Err(_) => Normalization::Rejected(RejectReason::OutOfRange),
    }
}

fn day_from_parts(surface: &str, sep: char) -> Normalization {
    let mut parts = surface.split(sep);
    let year = parts.next().unwrap().parse().unwrap();
    let month = parts.next().unwrap().parse().unwrap();
    let day = parts.next().unwrap().parse().unwrap();
    day_value(year, month, day)
}

/// Slash dates resolve only when the component order is forced; otherwise
/// the ambiguous-order rejection mirrors the two-reading problem
/// ("2019/11/25" also reads as day 19, month 11, year '25).
fn normalize_slash(surface: &str) -> Normalization {
    use Normalization::Rejected;
    use RejectReason::*;

    let parts: Vec<&str> = surface.split('/').collect();
    let (a_raw, b_raw, c_raw) = (parts[0], parts[1], parts[2]);
    let (a, b, c): (u32, u32, u32) =
        (a_raw.parse().unwrap(), b_raw.parse().unwrap(), c_raw.parse().unwrap());
    match (a_raw.len() == 4, c_raw.len() == 4) {
        (true, true) => Rejected(NotADate),
        (true, false) => {
            let truncated_day = a % 100;
            if c_raw.len() <= 2 && (1..=12).contains(&b) && (1..=31).contains(&truncated_day) {
                return Rejected(AmbiguousOrder);
            }
            day_value(a as i32, b, c)
        }
        (false, true) => {
            let (day, month) = if a == b {
                (a, b)
            } else if a > 12 && b <= 12 {
                (a, b)
            } else if b > 12 && a <= 12 {
                (b, a)
            } else if a <= 12 && b <= 12 {
                return Rejected(AmbiguousOrder);
            } else {
                return Rejected(OutOfRange);
            };
            day_value(c as i32, month, day)
        }
        // Two-digit years leave the century unresolved.
        (false, false) => Rejected(AmbiguousOrder),
    }
}

fn normalize_decade(surface: &str) -> Normalization {
    let start = if let Some(c) = patterns::DECADE_DIGITS.captures(surface) {
        if let Some(prefix) = c.get(1).or_else(|| c.get(2)) {
            prefix.as_str().parse::<i32>().unwrap() * 10
        } else {
            1900 + c[3].parse::<i32>().unwrap() * 10
        }
    } else if let Some(c) = patterns::SPELLED_DECADE.captures(surface) {
        patterns::spelled_decade_start(&c[1]).expect("alternation matched") as i32
    } else {
        return Normalization::Rejected(RejectReason::NotADate);
    };
    match TimemlValue::decade(start) {
        Ok(v) => Normalization::Value(v),
        Err(_) => Normalization::Rejected(RejectReason::OutOfRange),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn norm(surface: &str) -> Normalization {
        normalize(&RawTimex::from_surface(surface))
    }

    fn value_of(surface: &str) -> String {
        match norm(surface) {
            Normalization::Value(v) => v.to_string(),
            Normalization::Rejected(r) => panic!("{surface:?} rejected: {r}"),
        }
    }

    fn rejection_of(surface: &str) -> RejectReason {
        match norm(surface) {
            Normalization::Rejected(r) => r,
            Normalization::Value(v) => panic!("{surface:?} normalized to {v}"),
        }
    }

    #[test]
    fn tag_filter_keeps_btime_runs() {
        use TagLabel::*;
        assert_eq!(filter_tag_sequence(&[BTime, ITime, Outside]), vec![(0, 2)]);
        assert_eq!(filter_tag_sequence(&[ITime, ITime, Outside]), vec![]);
        assert_eq!(filter_tag_sequence(&[Outside, Outside, Outside]), vec![]);
        assert_eq!(filter_tag_sequence(&[]), vec![]);
        // Adjacent entities and a trailing orphan I-run.
        assert_eq!(
            filter_tag_sequence(&[BTime, BTime, ITime, Outside, ITime]),
            vec![(0, 1), (1, 3)]
        );
    }

    #[test]
    fn identify_single_year() {
        let found = identify("In 2003, Tim Duncan won his first NBA Finals MVP award.");
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].surface, "2003");
        assert_eq!(found[0].char_start, 3);
        assert_eq!(found[0].char_end, 7);
    }

    #[test]
    fn identify_no_expression() {
        assert!(identify("James famously announced his decision").is_empty());
    }

    #[test]
    fn identify_two_years() {
        let found =
            identify("James returned to the Cleveland Cavaliers in 2014 and won the title in 2016.");
        let surfaces: Vec<&str> = found.iter().map(|t| t.surface.as_str()).collect();
        assert_eq!(surfaces, vec!["2014", "2016"]);
    }

    #[test]
    fn identify_prefers_longer_matches() {
        let found = identify("It happened in June 2012.");
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].surface, "June 2012");
    }

    #[test]
    fn identify_spans_are_disjoint_and_sorted() {
        let found = identify("From 21 July 1924 to June 2012, then the 18th century and 1990s.");
        for pair in found.windows(2) {
            assert!(pair[0].char_end <= pair[1].char_start);
        }
        let surfaces: Vec<&str> = found.iter().map(|t| t.surface.as_str()).collect();
        assert_eq!(surfaces, vec!["21 July 1924", "June 2012", "the 18th century", "1990s"]);
    }

    #[test]
    fn golden_accepted() {
        assert_eq!(value_of("21 July 1924"), "1924-07-21");
        assert_eq!(value_of("November 7, 2006"), "2006-11-07");
        assert_eq!(value_of("June 2012"), "2012-06");
        assert_eq!(value_of("18th century"), "17XX");
        assert_eq!(value_of("the early ' 90s"), "199X");
        assert_eq!(value_of("2015"), "2015");
        assert_eq!(value_of("may 1913"), "1913-05");
        assert_eq!(value_of("november 1 , 2015"), "2015-11-01");
        assert_eq!(value_of("30 november 1945"), "1945-11-30");
        assert_eq!(value_of("19th century"), "18XX");
        assert_eq!(value_of("01/01/2022"), "2022-01-01");
        assert_eq!(value_of("seventeen hundred and fifty two"), "1752");
        assert_eq!(value_of("2043/11/05"), "2043-11-05");
    }

    #[test]
    fn golden_rejected() {
        assert_eq!(rejection_of("2019/11/25"), RejectReason::AmbiguousOrder);
        assert_eq!(rejection_of("2004 third quarter"), RejectReason::QuarterFormat);
        assert_eq!(rejection_of("031300010703"), RejectReason::NotADate);
    }

    #[test]
    fn spelled_years_compose_literally() {
        // Upstream tooling printed 1454 for this surface; literal composition
        // of the words gives 1450.
        assert_eq!(value_of("fourteen fifty"), "1450");
        assert_eq!(value_of("nineteen eighty-four"), "1984");
    }

    #[test]
    fn century_arithmetic_uses_previous_prefix() {
        assert_eq!(value_of("2nd century"), "01XX");
        assert_eq!(value_of("21st century"), "20XX");
        assert_eq!(rejection_of("1st century"), RejectReason::OutOfRange);
        assert_eq!(rejection_of("31st century"), RejectReason::OutOfRange);
    }

    #[test]
    fn slash_disambiguation() {
        assert_eq!(value_of("25/12/2020"), "2020-12-25");
        assert_eq!(value_of("12/25/2020"), "2020-12-25");
        assert_eq!(rejection_of("05/12/2020"), RejectReason::AmbiguousOrder);
        assert_eq!(rejection_of("01/02/99"), RejectReason::AmbiguousOrder);
        assert_eq!(value_of("2000/11/05"), "2000-11-05");
        assert_eq!(rejection_of("2020/15/40"), RejectReason::OutOfRange);
    }

    #[test]
    fn component_range_rejections() {
        assert_eq!(rejection_of("February 30, 2001"), RejectReason::OutOfRange);
        assert_eq!(rejection_of("45 July 1924"), RejectReason::OutOfRange);
        assert_eq!(rejection_of("July 3015"), RejectReason::OutOfRange);
        assert_eq!(rejection_of("3001-01-01"), RejectReason::OutOfRange);
    }

    #[test]
    fn arbitrary_text_is_not_a_date() {
        assert_eq!(rejection_of("next Tuesday"), RejectReason::NotADate);
        assert_eq!(rejection_of(""), RejectReason::NotADate);
        assert_eq!(rejection_of("fifty two

"), RejectReason::NotADate);
    }

    #[test]
    fn decade_shapes() {
        assert_eq!(value_of("1990s"), "199X");
        assert_eq!(value_of("the 1980s"), "198X");
        assert_eq!(value_of("'90s"), "199X");
        assert_eq!(value_of("mid-1970s"), "197X");
        assert_eq!(value_of("the nineties"), "199X");
        assert_eq!(value_of("199X"), "199X");
    }

    #[test]
    fn quarter_shapes_rejected() {
        assert_eq!(rejection_of("2004 Q3"), RejectReason::QuarterFormat);
        assert_eq!(rejection_of("Q3 2004"), RejectReason::QuarterFormat);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_value() -> impl Strategy<Value = TimemlValue> {
            use crate::calendar::days_in_month;
            prop_oneof![
                (1i32..=2999, 1u32..=12).prop_flat_map(|(y, m)| {
                    (Just(y), Just(m), 1u32..=days_in_month(y, m).unwrap())
                        .prop_map(|(y, m, d)| TimemlValue::Day(CivilDate::new(y, m, d).unwrap()))
                }),
                (1i32..=2999, 1u32..=12).prop_map(|(y, m)| TimemlValue::month(y, m).unwrap()),
                (1000i32..=2999).prop_map(|y| TimemlValue::year(y).unwrap()),
                (1i32..=299).prop_map(|d| TimemlValue::decade(d * 10).unwrap()),
                (1i32..=29).prop_map(|c| TimemlValue::century(c * 100).unwrap()),
            ]
        }

        proptest! {
            #[test]
            fn normalize_total_and_never_panics(s in "\\PC{0,64}") {
                let _ = normalize(&RawTimex::from_surface(s));
            }

            #[test]
            fn canonical_round_trip(v in arb_value()) {
                let rendered = v.to_string();
                prop_assert_eq!(norm(&rendered), Normalization::Value(v));
                prop_assert_eq!(rendered.parse::<TimemlValue>().unwrap(), v);
            }

            #[test]
            fn identify_disjoint_sorted(s in "\\PC{0,200}") {
                let found = identify(&s);
                for pair in found.windows(2) {
                    prop_assert!(pair[0].char_end <= pair[1].char_start);
                }
                for t in &found {
                    prop_assert_eq!(&s[t.char_start..t.char_end], t.surface.as_str());
                }
            }
        }
    }
}
