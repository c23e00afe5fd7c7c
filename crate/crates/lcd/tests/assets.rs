use lcd_tools::paper::ASSETS;
use sha2::{Digest, Sha256};

const DIGESTS: [(&str, &str); 5] = [
    (
        "t_codes.txt",
        "e3cf372391a323f63712051cf25d2a2db92996152c4f6fd4bd1942622b065604",
    ),
    (
        "fig_matrices.txt",
        "93a0d8d8fee9db859b06640a0e278165e13b7ade8de24a99faf7e31a3592f0a8",
    ),
    (
        "h26.txt",
        "a12666897b66bcdbacdab57dc6ddda6b28c95536718fc71bb33565912eb4be59",
    ),
    (
        "m36t.txt",
        "79272a2703bcc514cbab6ed23157298c6023952f2d58402a7e3552c5f1b798ce",
    ),
    (
        "d3_small.txt",
        "87af9fda9b264581b3bfd063d50f43480402d688f74f5151da14e831c1acbc3d",
    ),
];

#[test]
fn embedded_assets_match_recorded_digests() {
    assert_eq!(ASSETS.len(), DIGESTS.len());
    for ((name, body), (want_name, want)) in ASSETS.iter().zip(DIGESTS) {
        assert_eq!(*name, want_name);
        let got: String = Sha256::digest(body.as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        assert_eq!(got, want, "asset {name} changed");
    }
}
