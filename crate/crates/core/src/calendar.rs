//! Calendar arithmetic for profile construction.
//!
//! Simulation years use the real calendar; leap years carry 8784 hours.

use chrono::{Datelike, NaiveDate};

pub fn is_leap_year(year: i32) -> bool {
    NaiveDate::from_ymd_opt(year, 2, 29).is_some()
}

pub fn hours_in_year(year: i32) -> usize {
    if is_leap_year(year) {
        8784
    } else {
        8760
    }
}

pub fn days_in_year(year: i32) -> u32 {
    if is_leap_year(year) {
        366
    } else {
        365
    }
}

pub fn days_in_month(year: i32, month: u32) -> u32 {
    let first = NaiveDate::from_ymd_opt(year, month, 1)
        .unwrap_or_else(|| panic!("invalid year-month {year}-{month}"));
    let next = if month == 12 {
        NaiveDate::from_ymd_opt(year + 1, 1, 1).unwrap()
    } else {
        NaiveDate::from_ymd_opt(year, month + 1, 1).unwrap()
    };
    (next - first).num_days() as u32
}

pub fn hours_in_month(year: i32, month: u32) -> usize {
    days_in_month(year, month) as usize * 24
}

/// Zero-based hour index of `date` 00:00 within its year.
pub fn hour_index_of_date(date: NaiveDate) -> usize {
    let jan1 = NaiveDate::from_ymd_opt(date.year(), 1, 1).unwrap();
    (date - jan1).num_days() as usize * 24
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leap_years() {
        assert!(is_leap_year(2020));
        assert!(!is_leap_year(2035));
        assert!(is_leap_year(2040));
        assert!(!is_leap_year(2100));
        assert_eq!(hours_in_year(2035), 8760);
        assert_eq!(hours_in_year(2040), 8784);
    }

    #[test]
    fn month_lengths() {
        assert_eq!(days_in_month(2035, 1), 31);
        assert_eq!(days_in_month(2035, 2), 28);
        assert_eq!(days_in_month(2040, 2), 29);
        assert_eq!(days_in_month(2035, 12), 31);
        let total: u32 = (1..=12).map(|m| days_in_month(2035, m)).sum();
        assert_eq!(total, 365);
    }

    #[test]
    fn hour_index() {
        let d = NaiveDate::from_ymd_opt(2035, 1, 1).unwrap();
        assert_eq!(hour_index_of_date(d), 0);
        let d = NaiveDate::from_ymd_opt(2035, 2, 1).unwrap();
        assert_eq!(hour_index_of_date(d), 31 * 24);
    }
}
