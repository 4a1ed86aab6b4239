use std::fmt;

/// A scored 30 s epoch label.
///
/// The six classifier classes come first in the fixed output order
/// (Awake, S1, S2, S3, S4, REM); `Movement` only appears in raw scorings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SleepStage {
    Awake,
    S1,
    S2,
    S3,
    S4,
    Rem,
    Movement,
}

impl SleepStage {
    /// The six classifier classes in network output order.
    pub const CLASSES: [SleepStage; 6] = [
        SleepStage::Awake,
        SleepStage::S1,
        SleepStage::S2,
        SleepStage::S3,
        SleepStage::S4,
        SleepStage::Rem,
    ];

    /// Every label a hypnogram may carry, in report order.
    pub const ALL: [SleepStage; 7] = [
        SleepStage::Awake,
        SleepStage::S1,
        SleepStage::S2,
        SleepStage::S3,
        SleepStage::S4,
        SleepStage::Rem,
        SleepStage::Movement,
    ];

    pub const N_CLASSES: usize = 6;

    /// Position in the classifier output vector, `None` for `Movement`.
    pub fn class_index(self) -> Option<usize> {
        match self {
            SleepStage::Movement => None,
            s => Some(s as usize),
        }
    }

    pub fn from_class_index(i: usize) -> Option<SleepStage> {
        Self::CLASSES.get(i).copied()
    }

    /// Stages 1-4 and REM, i.e. the stages that count toward total sleep time.
    pub fn is_sleep(self) -> bool {
        matches!(
            self,
            SleepStage::S1 | SleepStage::S2 | SleepStage::S3 | SleepStage::S4 | SleepStage::Rem
        )
    }

    /// Hypnogram file token.
    pub fn token(self) -> char {
        match self {
            SleepStage::Awake => 'W',
            SleepStage::S1 => '1',
            SleepStage::S2 => '2',
            SleepStage::S3 => '3',
            SleepStage::S4 => '4',
            SleepStage::Rem => 'R',
            SleepStage::Movement => 'M',
        }
    }

    pub fn from_token(token: &str) -> Option<SleepStage> {
        Some(match token {
            "W" => SleepStage::Awake,
            "1" => SleepStage::S1,
            "2" => SleepStage::S2,
            "3" => SleepStage::S3,
            "4" => SleepStage::S4,
            "R" => SleepStage::Rem,
            "M" => SleepStage::Movement,
            _ => return None,
        })
    }

    /// Short display name, also used in model and profile files.
    pub fn name(self) -> &'static str {
        match self {
            SleepStage::Awake => "Awake",
            SleepStage::S1 => "S1",
            SleepStage::S2 => "S2",
            SleepStage::S3 => "S3",
            SleepStage::S4 => "S4",
            SleepStage::Rem => "REM",
            SleepStage::Movement => "Movement",
        }
    }

    /// Accepts display names (case-insensitive) and hypnogram tokens.
    pub fn parse_name(s: &str) -> Option<SleepStage> {
        let s = s.trim();
        if let Some(stage) = Self::from_token(s) {
            return Some(stage);
        }
        Self::ALL
            .into_iter()
            .find(|stage| stage.name().eq_ignore_ascii_case(s))
            .or(match s.to_ascii_lowercase().as_str() {
                "wake" | "w" => Some(SleepStage::Awake),
                "r" => Some(SleepStage::Rem),
                _ => None,
            })
    }
}

impl fmt::Display for SleepStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_round_trip() {
        for stage in SleepStage::ALL {
            let t = stage.token().to_string();
            assert_eq!(SleepStage::from_token(&t), Some(stage));
            assert_eq!(SleepStage::parse_name(stage.name()), Some(stage));
        }
    }

    #[test]
    fn class_indices() {
        for (i, stage) in SleepStage::CLASSES.iter().enumerate() {
            assert_eq!(stage.class_index(), Some(i));
        }
        assert_eq!(SleepStage::Movement.class_index(), None);
        assert!(!SleepStage::Awake.is_sleep());
        assert!(!SleepStage::Movement.is_sleep());
        assert!(SleepStage::Rem.is_sleep());
    }
}
