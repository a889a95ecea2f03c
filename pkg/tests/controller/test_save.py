# -*- coding: utf-8 -*-

"""
tests.controller.test_save
~~~~~~~~~~~~~~~~~~~~~~~~~~

For testing the functions under cdsvar/controller/save.py

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

import json
import os

import numpy as np
import pandas as pd

from cdsvar.controller.causality import impulse_response
from cdsvar.controller.save import (
    atomic_write,
    save_as_csv_controller,
    save_as_json_controller,
    save_as_svg_controller,
)
from cdsvar.models.var import VarSpec
from cdsvar.utils import plot

from tests.helper.builders import fake_fit


def test_atomic_write(tmp_path):

    path = atomic_write("first\n", str(tmp_path / "nested" / "deeper" / "file.txt"))
    atomic_write("second\n", path)

    assert open(path, encoding="utf-8").read() == "second\n"
    assert os.listdir(tmp_path / "nested" / "deeper") == ["file.txt"]


def test_save_as_json_controller(tmp_path):

    path = save_as_json_controller(
        {"b": np.float64(1.5), "a": [np.int64(2), float("inf")]}, str(tmp_path / "doc.json")
    )

    text = open(path, encoding="utf-8").read()
    assert text.index('"a"') < text.index('"b"')
    assert text.endswith("}\n")
    assert json.loads(text) == {"a": [2, "inf"], "b": 1.5}


def test_save_as_csv_controller(tmp_path):

    frame = pd.DataFrame({"period": [1, 2], "payment": [5875.0, 5875.0]})

    path = save_as_csv_controller(frame, str(tmp_path / "schedule.csv"))

    assert open(path, encoding="utf-8").read() == "period,payment\n1,5875.0\n2,5875.0\n"


def test_save_as_svg_controller(tmp_path):

    spec = VarSpec(("RS", "DCDS"), 1)
    irf = impulse_response(fake_fit(spec, coefficients=[[0.0, 0.5, 0.0], [0.0, 0.0, 0.5]]), 5)

    texts = []
    for name in ("first.svg", "second.svg"):
        figure = plot.irf_figure(irf, "DCDS", "RS", "DCDS after an RS shock")
        texts.append(open(save_as_svg_controller(figure, str(tmp_path / name)),
                          encoding="utf-8").read())
        plot.close(figure)

    assert texts[0].lstrip().startswith("<?xml")
    assert "<dc:date>" not in texts[0]
    assert texts[0] == texts[1]
