"""Smoke tests for the python bindings."""

import gcwe


def test_table_rows():
    rows = gcwe.table_rows()
    assert len(rows) == 64
    ccc = rows[0]
    assert ccc["codon"] == "CCC"
    assert ccc["aa_vmc"] == "Pro"
    assert ccc["JH"] == "3/2"
    assert ccc["mH"] == "3/2"


def test_table_check_clean():
    diff = gcwe.table_check()
    assert diff["clean"]
    assert diff["label_mismatches"] == []
    assert diff["partitions_match"]


def test_codon_labels():
    labels = gcwe.codon_labels("CUC")
    assert labels == {"JH": "1/2", "JV": "3/2", "mH": "1/2", "mV": "3/2"}


def test_couple():
    assert gcwe.couple("3/2", "3/2", "1", "-1") == ("1/2", "1/2")
    assert gcwe.couple("1/2", "1/2", "1/2", "-1/2") == ("0", "0")


def test_amino_acid():
    assert gcwe.amino_acid("UGA", "VMC") == "Trp"
    assert gcwe.amino_acid("UGA", "SUC") == "Ter"


def test_check():
    res = gcwe.check("CCC", 3, "U")
    assert res["allowed"]
    assert res["target"] == "CCU"
    assert res["predicted"]["JH"] == "1/2"

    res = gcwe.check_double("UCC", 1, "A", 2, "G")
    assert res["allowed"]
    assert res["target"] == "AGC"
    assert res["virtual_codon"] == "ACC"


def test_pipeline():
    result = gcwe.run_pipeline()
    assert result["census"] == {6: 3, 4: 5, 2: 13}
    sextets = [m for m in result["multiplets"] if len(m["codons"]) == 6]
    assert len(sextets) == 3
    accepted = {(e["source"], e["target"]) for e in result["accepted_events"]
                if e["level"] >= 3}
    assert accepted == {("CUA", "UUA"), ("CGA", "AGA"), ("UCC", "AGC")}


def test_pipeline_with_config():
    result = gcwe.run_pipeline("merge_policy = accept_all\n")
    assert result["census"] != {6: 3, 4: 5, 2: 13}


def test_qlimit():
    assert abs(gcwe.q_number(2.0, 0.5) - 2.5) < 1e-12
    report = gcwe.limit_checks(1e-4, 3, "1")
    assert report["q"] == 1e-4
    assert all(e["deviation"] < 1e-3 for e in report["entries"])


def test_default_config_round_trip():
    text = gcwe.default_config()
    assert "operator_order = state_first" in text
    assert gcwe.run_pipeline(text)["census"] == {6: 3, 4: 5, 2: 13}
