//! The 50 known good examples of Hall's conjecture, as published, with
//! their reported Hall ratios and √x approximations. Ships as the built-in
//! fixture behind the `verify` and `table` commands and the regression
//! tests.
//!
//! Entry 1 (x = 2) carries the published ratio 1.42; the exact computation
//! gives 1.41, a known rounding anomaly in the published list. Its
//! approximation column is empty because the entry predates the sieve
//! (its convergent has q = 1, below the sieve's starting q = 2).

/// One published entry: x, the printed ratio, and the printed p/q (absent
/// for entry 1). All values are decimal strings; x reaches 112 bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnownExample {
    pub index: u32,
    pub x: &'static str,
    pub published_ratio: &'static str,
    pub approx: Option<(&'static str, &'static str)>,
}

pub const KNOWN_EXAMPLES: [KnownExample; 50] = [
    KnownExample { index: 1, x: "2", published_ratio: "1.42", approx: None },
    KnownExample { index: 2, x: "5234", published_ratio: "4.26", approx: Some(("217", "3")) },
    KnownExample { index: 3, x: "8158", published_ratio: "3.76", approx: Some(("271", "3")) },
    KnownExample { index: 4, x: "93844", published_ratio: "1.03", approx: Some(("919", "3")) },
    KnownExample { index: 5, x: "367806", published_ratio: "2.93", approx: Some(("1213", "2")) },
    KnownExample { index: 6, x: "421351", published_ratio: "1.05", approx: Some(("5193", "8")) },
    KnownExample { index: 7, x: "720114", published_ratio: "3.77", approx: Some(("4243", "5")) },
    KnownExample { index: 8, x: "939787", published_ratio: "3.16", approx: Some(("6786", "7")) },
    KnownExample { index: 9, x: "28187351", published_ratio: "4.87", approx: Some(("90256", "17")) },
    KnownExample { index: 10, x: "110781386", published_ratio: "1.23", approx: Some(("115778", "11")) },
    KnownExample { index: 11, x: "154319269", published_ratio: "1.08", approx: Some(("211183", "17")) },
    KnownExample { index: 12, x: "384242766", published_ratio: "1.34", approx: Some(("176419", "9")) },
    KnownExample { index: 13, x: "390620082", published_ratio: "1.33", approx: Some(("177877", "9")) },
    KnownExample { index: 14, x: "3790689201", published_ratio: "2.20", approx: Some(("430980", "7")) },
    KnownExample { index: 15, x: "65589428378", published_ratio: "2.19", approx: Some(("768313", "3")) },
    KnownExample { index: 16, x: "952764389446", published_ratio: "1.15", approx: Some(("79063817", "81")) },
    KnownExample { index: 17, x: "12438517260105", published_ratio: "1.27", approx: Some(("507863263", "144")) },
    KnownExample { index: 18, x: "35495694227489", published_ratio: "1.15", approx: Some(("1030703950", "173")) },
    KnownExample { index: 19, x: "53197086958290", published_ratio: "1.66", approx: Some(("437617999", "60")) },
    KnownExample { index: 20, x: "5853886516781223", published_ratio: "46.60", approx: Some(("6426898417", "84")) },
    KnownExample { index: 21, x: "12813608766102806", published_ratio: "1.30", approx: Some(("17319173410", "153")) },
    KnownExample { index: 22, x: "23415546067124892", published_ratio: "1.46", approx: Some(("68094518942", "445")) },
    KnownExample { index: 23, x: "38115991067861271", published_ratio: "6.50", approx: Some(("108354409918", "555")) },
    KnownExample { index: 24, x: "322001299796379844", published_ratio: "1.04", approx: Some(("387001980055", "682")) },
    KnownExample { index: 25, x: "471477085999389882", published_ratio: "1.38", approx: Some(("83083668769", "121")) },
    KnownExample { index: 26, x: "810574762403977064", published_ratio: "4.66", approx: Some(("359227383073", "399")) },
    KnownExample { index: 27, x: "9870884617163518770", published_ratio: "1.90", approx: Some(("4524186815567", "1440")) },
    KnownExample { index: 28, x: "42532374580189966073", published_ratio: "3.47", approx: Some(("8386886845023", "1286")) },
    KnownExample { index: 29, x: "44648329463517920535", published_ratio: "1.79", approx: Some(("4603857036361", "689")) },
    KnownExample { index: 30, x: "51698891432429706382", published_ratio: "1.75", approx: Some(("9318491574937", "1296")) },
    KnownExample { index: 31, x: "231411667627225650649", published_ratio: "3.71", approx: Some(("14649368819024", "963")) },
    KnownExample { index: 32, x: "601724682280310364065", published_ratio: "1.88", approx: Some(("39714194816596", "1619")) },
    KnownExample { index: 33, x: "4996798823245299750533", published_ratio: "2.17", approx: Some(("250164969159375", "3539")) },
    KnownExample { index: 34, x: "5592930378182848874404", published_ratio: "1.38", approx: Some(("32531865160357", "435")) },
    KnownExample { index: 35, x: "14038790674256691230847", published_ratio: "1.27", approx: Some(("392068197831386", "3309")) },
    KnownExample { index: 36, x: "77148032713960680268604", published_ratio: "10.18", approx: Some(("633004435512983", "2279")) },
    KnownExample { index: 37, x: "180179004295105849668818", published_ratio: "5.65", approx: Some(("678311009850201", "1598")) },
    KnownExample { index: 38, x: "372193377967238474960883", published_ratio: "1.33", approx: Some(("539307656512279", "884")) },
    KnownExample { index: 39, x: "664947779818324205678136", published_ratio: "16.53", approx: Some(("3652370552518775", "4479")) },
    KnownExample { index: 40, x: "2028871373185892500636155", published_ratio: "1.14", approx: Some(("11181418791644809", "7850")) },
    KnownExample { index: 41, x: "10747835083471081268825856", published_ratio: "1.35", approx: Some(("42884607802081920", "13081")) },
    KnownExample { index: 42, x: "37223900078734215181946587", published_ratio: "1.87", approx: Some(("46777434586297319", "7667")) },
    KnownExample { index: 43, x: "69586951610485633367491417", published_ratio: "1.22", approx: Some(("72198966044283893", "8655")) },
    KnownExample { index: 44, x: "3690445383173227306376634720", published_ratio: "1.51", approx: Some(("121619570207840431", "2002")) },
    KnownExample { index: 45, x: "162921297743817207342396140787", published_ratio: "10.65", approx: Some(("20237053244197156774", "50137")) },
    KnownExample { index: 46, x: "1114592308630995805123571151844", published_ratio: "1.04", approx: Some(("95524640670266092418", "90481")) },
    KnownExample { index: 47, x: "39739590925054773507790363346813", published_ratio: "3.75", approx: Some(("211515916260522809737", "33553")) },
    KnownExample { index: 48, x: "862611143810724763613366116643858", published_ratio: "1.10", approx: Some(("930889835660831460142", "31695")) },
    KnownExample { index: 49, x: "1062521751024771376590062279975859", published_ratio: "1.01", approx: Some(("1095269810850785984986", "33601")) },
    KnownExample { index: 50, x: "6078673043126084065007902175846955", published_ratio: "1.03", approx: Some(("20224028423712303104623", "259396")) },
];

/// Look up a published entry by its x value (decimal string).
pub fn find_by_x(x: &str) -> Option<&'static KnownExample> {
    KNOWN_EXAMPLES.iter().find(|e| e.x == x)
}
