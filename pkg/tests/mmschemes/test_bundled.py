import pytest

from mmschemes.bundled import bundled_names, bundled_path, certify_bundled, load_bundled
from mmschemes.generators import strassen_scheme


def describe_bundled_schemes():
    def lists_the_shipped_files():
        assert bundled_names() == ["2x6x6_r56", "3x4x6_r56", "strassen"]

    def resolves_names_with_or_without_suffix():
        assert bundled_path("strassen.bms") == bundled_path("strassen")
        assert bundled_path("strassen").is_file()

    def rejects_unknown_names():
        with pytest.raises(KeyError):
            bundled_path("4x4x4_r49")

    def caches_loaded_schemes():
        assert load_bundled("strassen") is load_bundled("strassen")

    def strassen_file_matches_the_generator():
        assert load_bundled("strassen") == strassen_scheme()

    def every_bundled_scheme_certifies():
        reports = certify_bundled()

        assert set(reports) == set(bundled_names())
        assert all(report.valid for report in reports.values())
