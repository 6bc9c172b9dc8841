//! Proleptic-Gregorian date arithmetic at day granularity.
//!
//! Every time span in this crate is an interval over [`DayOrdinal`]s: day
//! counts from the epoch 0001-01-01. The supported civil range is
//! [0001-01-01, 2999-12-31]; ordinals additionally admit one value past the
//! final day so that half-open intervals can cover the last supported year.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Earliest supported year.
pub const MIN_YEAR: i32 = 1;
/// Latest supported year.
pub const MAX_YEAR: i32 = 2999;

/// Ordinal of 2999-12-31, the last representable civil day.
pub const MAX_DAY_ORDINAL: u32 = 1_095_361;
/// One past [`MAX_DAY_ORDINAL`]; valid only as an exclusive interval end.
pub const END_SENTINEL_ORDINAL: u32 = MAX_DAY_ORDINAL + 1;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum CalendarError {
    #[error("year {0} outside supported range [{MIN_YEAR}, {MAX_YEAR}]")]
    YearOutOfRange(i32),
    #[error("month {0} outside [1, 12]")]
    MonthOutOfRange(u32),
    #[error("day {day} invalid for {year:04}-{month:02} (month has {max} days)")]
    DayOutOfRange { year: i32, month: u32, day: u32, max: u32 },
    #[error("day ordinal {0} outside supported range [0, {MAX_DAY_ORDINAL}]")]
    OrdinalOutOfRange(u32),
    #[error("cannot parse {0:?} as a calendar date")]
    Unparseable(String),
}

/// A validated proleptic-Gregorian calendar date.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CivilDate {
    year: i32,
    month: u32,
    day: u32,
}

impl CivilDate {
    pub fn new(year: i32, month: u32, day: u32) -> Result<Self, CalendarError> {
        if !(MIN_YEAR..=MAX_YEAR).contains(&year) {
            return Err(CalendarError::YearOutOfRange(year));
        }
        if !(1..=12).contains(&month) {
            return Err(CalendarError::MonthOutOfRange(month));
        }
        let max = days_in_month(year, month)?;
        if day < 1 || day > max {
            return Err(CalendarError::DayOutOfRange { year, month, day, max });
        }
        Ok(Self { year, month, day })
    }

    pub fn year(&self) -> i32 {
        self.year
    }

    pub fn month(&self) -> u32 {
        self.month
    }

    pub fn day(&self) -> u32 {
        self.day
    }

    /// The next calendar day. Errors only when stepping past the supported range.
    pub fn next_day(&self) -> Result<Self, CalendarError> {
        if self.day < days_in_month(self.year, self.month)? {
            Ok(Self { day: self.day + 1, ..*self })
        } else if self.month < 12 {
            Ok(Self { year: self.year, month: self.month + 1, day: 1 })
        } else {
            Self::new(self.year + 1, 1, 1)
        }
    }
}

impl fmt::Display for CivilDate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}-{:02}", self.year, self.month, self.day)
    }
}

impl FromStr for CivilDate {
    type Err = CalendarError;

    /// Parses zero-padded ISO "YYYY-MM-DD".
    fn from_str(s: &str) -> Result<Self, CalendarError> {
        let parts: Vec<&str> = s.split('-').collect();
        if parts.len() != 3 || parts[0].len() != 4 || parts[1].len() != 2 || parts[2].len() != 2 {
            return Err(CalendarError::Unparseable(s.to_string()));
        }
        let year: i32 = parts[0].parse().map_err(|_| CalendarError::Unparseable(s.to_string()))?;
        let month: u32 = parts[1].parse().map_err(|_| CalendarError::Unparseable(s.to_string()))?;
        let day: u32 = parts[2].parse().map_err(|_| CalendarError::Unparseable(s.to_string()))?;
        Self::new(year, month, day)
    }
}

/// Day count from the epoch 0001-01-01 (ordinal 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DayOrdinal(u32);

impl DayOrdinal {
    /// Accepts ordinals of civil days plus the exclusive-end sentinel.
    pub fn new(value: u32) -> Result<Self, CalendarError> {
        if value > END_SENTINEL_ORDINAL {
            return Err(CalendarError::OrdinalOutOfRange(value));
        }
        Ok(Self(value))
    }

    pub fn value(&self) -> u32 {
        self.0
    }

    /// Renders as ISO "YYYY-MM-DD". The end sentinel renders as "3000-01-01".
    pub(crate) fn render_iso(&self) -> String {
        if self.0 == END_SENTINEL_ORDINAL {
            return "3000-01-01".to_string();
        }
        from_day_ordinal(*self).expect("ordinal validated on construction").to_string()
    }

    /// Inverse of [`DayOrdinal::render_iso`], accepting the sentinel string.
    pub(crate) fn parse_iso(s: &str) -> Result<Self, CalendarError> {
        if s == "3000-01-01" {
            return Ok(Self(END_SENTINEL_ORDINAL));
        }
        Ok(to_day_ordinal(&s.parse()?))
    }
}

pub fn is_leap_year(year: i32) -> bool {
    year % 4 == 0 && (year % 100 != 0 || year % 400 == 0)
}

/// Days in `month` of `year`; February yields 29 exactly in leap years.
pub fn days_in_month(year: i32, month: u32) -> Result<u32, CalendarError> {
    match month {
        1 | 3 | 5 | 7 | 8 | 10 | 12 => Ok(31),
        4 | 6 | 9 | 11 => Ok(30),
        2 => Ok(if is_leap_year(year) { 29 } else { 28 }),
        _ => Err(CalendarError::MonthOutOfRange(month)),
    }
}

const CUMULATIVE_MONTH_DAYS: [u32; 12] = [0, 31, 59, 90, 120, 151, 181, 212, 243, 273, 304, 334];

fn day_of_year(date: &CivilDate) -> u32 {
    let leap_shift = if date.month > 2 && is_leap_year(date.year) { 1 } else { 0 };
    CUMULATIVE_MONTH_DAYS[(date.month - 1) as usize] + date.day + leap_shift
}

/// Maps a date to its day ordinal. Strictly monotone in (year, month, day).
pub fn to_day_ordinal(date: &CivilDate) -> DayOrdinal {
    let y = (date.year - 1) as u32;
    let leap_days = y / 4 - y / 100 + y / 400;
    DayOrdinal(y * 365 + leap_days + day_of_year(date) - 1)
}

/// Inverse of [`to_day_ordinal`]. Rejects the exclusive-end sentinel.
pub fn from_day_ordinal(ordinal: DayOrdinal) -> Result<CivilDate, CalendarError> {
    if ordinal.0 > MAX_DAY_ORDINAL {
        return Err(CalendarError::OrdinalOutOfRange(ordinal.0));
    }
    // Era decomposition over the 400-year Gregorian cycle, shifted so years
    // run March..February and the leap day falls at the end of the cycle.
    let shifted = ordinal.0 as i64 + 306;
    let era = shifted.div_euclid(146_097);
    let day_of_era = shifted.rem_euclid(146_097);
    let year_of_era =
        (day_of_era - day_of_era / 1460 + day_of_era / 36_524 - day_of_era / 146_096) / 365;
    let year = year_of_era + era * 400;
    let day_of_shifted_year = day_of_era - (365 * year_of_era + year_of_era / 4 - year_of_era / 100);
    let shifted_month = (5 * day_of_shifted_year + 2) / 153;
    let day = (day_of_shifted_year - (153 * shifted_month + 2) / 5 + 1) as u32;
    let month = if shifted_month < 10 { shifted_month + 3 } else { shifted_month - 9 } as u32;
    CivilDate::new((year + i64::from(month <= 2)) as i32, month, day)
}
