// Generated by `mckay export-catalog crates/verify/catalog`; kept in sync by the drift test.
pub(crate) static FILES: &[(&str, &str)] = &[
    ("BD2.json", include_str!("../catalog/BD2.json")),
    ("BD3.json", include_str!("../catalog/BD3.json")),
    ("BD4.json", include_str!("../catalog/BD4.json")),
    ("BD5.json", include_str!("../catalog/BD5.json")),
    ("BI.json", include_str!("../catalog/BI.json")),
    ("BO.json", include_str!("../catalog/BO.json")),
    ("BT.json", include_str!("../catalog/BT.json")),
    ("C10.json", include_str!("../catalog/C10.json")),
    ("C11.json", include_str!("../catalog/C11.json")),
    ("C12.json", include_str!("../catalog/C12.json")),
    ("C2.json", include_str!("../catalog/C2.json")),
    ("C3.json", include_str!("../catalog/C3.json")),
    ("C4.json", include_str!("../catalog/C4.json")),
    ("C5.json", include_str!("../catalog/C5.json")),
    ("C6.json", include_str!("../catalog/C6.json")),
    ("C7.json", include_str!("../catalog/C7.json")),
    ("C8.json", include_str!("../catalog/C8.json")),
    ("C9.json", include_str!("../catalog/C9.json")),
    ("Delta3x4.json", include_str!("../catalog/Delta3x4.json")),
    ("Delta6x3.json", include_str!("../catalog/Delta6x3.json")),
    ("Delta6x4.json", include_str!("../catalog/Delta6x4.json")),
    ("Delta6x6.json", include_str!("../catalog/Delta6x6.json")),
    ("E.json", include_str!("../catalog/E.json")),
    ("F.json", include_str!("../catalog/F.json")),
    ("G.json", include_str!("../catalog/G.json")),
    ("I.json", include_str!("../catalog/I.json")),
    ("I168.json", include_str!("../catalog/I168.json")),
    ("J.json", include_str!("../catalog/J.json")),
    ("K.json", include_str!("../catalog/K.json")),
    ("L.json", include_str!("../catalog/L.json")),
    ("O.json", include_str!("../catalog/O.json")),
    ("T.json", include_str!("../catalog/T.json")),
];
