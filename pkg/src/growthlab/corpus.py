"""Built-in polytope corpus and the per-vertex report runner."""

import json
import os
from dataclasses import dataclass
from fractions import Fraction

from . import growth as gr
from . import okounkov as ok
from . import polytope as pt
from .errors import GrowthLabError
from .rationals import rat_str


def builtin_corpus():
    """Standard simplices (n = 1, 2, 3), boxes [0, 2]^n, and the Hirzebruch
    trapezoid conv{(0,0), (3,0), (1,1), (0,1)}."""
    T = pt.hull([(0, 0), (3, 0), (1, 1), (0, 1)])
    return [
        ("simplex1", pt.standard_simplex(1)),
        ("simplex2", pt.standard_simplex(2)),
        ("simplex3", pt.standard_simplex(3)),
        ("interval2", pt.box([2])),
        ("square2", pt.box([2, 2])),
        ("cube2", pt.box([2, 2, 2])),
        ("trapezoid", T),
    ]


def load_user_corpus(directory):
    entries = []
    for name in sorted(os.listdir(directory)):
        if not name.endswith(".json"):
            continue
        with open(os.path.join(directory, name)) as fh:
            data = json.load(fh)
        entries.append((name[:-5], pt.Polytope.from_json_dict(data)))
    return entries


@dataclass(frozen=True)
class CorpusRow:
    name: str
    vertex: tuple
    dim: int
    volume_MA: Fraction | None
    seshadri_lp: Fraction | None
    seshadri_domination: Fraction | None
    okounkov_identity: bool | None
    gromov: Fraction | None
    nth_root_volume: float | None
    slack: float | None
    error: str | None = None

    def to_json_dict(self):
        if self.error is not None:
            return {"name": self.name,
                    "vertex": [rat_str(x) for x in self.vertex],
                    "error": self.error}
        return {"name": self.name,
                "vertex": [rat_str(x) for x in self.vertex],
                "dim": self.dim,
                "volume_MA": rat_str(self.volume_MA),
                "seshadri_lp": rat_str(self.seshadri_lp),
                "seshadri_domination": rat_str(self.seshadri_domination),
                "okounkov_identity": self.okounkov_identity,
                "gromov": rat_str(self.gromov),
                "nth_root_volume": self.nth_root_volume,
                "slack": self.slack}


def corpus_rows(entries, k_levels=(1, 2, 4), k_max_body=3):
    """One exact row per (polytope, vertex); a bad entry flags its own rows
    and never aborts the run."""
    rows = []
    for name, P in entries:
        try:
            vertices = P.vertices
        except GrowthLabError as e:
            rows.append(CorpusRow(name, (), -1, None, None, None, None, None,
                                  None, None, error=str(e)))
            continue
        for v in vertices:
            try:
                rows.append(_corpus_row(name, P, v, k_levels, k_max_body))
            except GrowthLabError as e:
                rows.append(CorpusRow(name, v, P.ambient_dim, None, None, None,
                                      None, None, None, None,
                                      error=f"{type(e).__name__}: {e}"))
    return rows


def _corpus_row(name, P, v, k_levels, k_max_body):
    gc = gr.build_growth_condition(P, v, k_levels)
    vol = gr.monge_ampere_volume(gc)
    ses = gr.seshadri_constant(gc)
    series = ok.GradedMonomialSeries.toric(gc.polytope, k_max_body)
    body = ok.okounkov_body(series)
    verdict = ok.volume_identity_check(body, vol)
    return CorpusRow(
        name=name,
        vertex=v,
        dim=gc.dim,
        volume_MA=vol,
        seshadri_lp=ses.lp_value,
        seshadri_domination=ses.domination_value,
        okounkov_identity=bool(verdict.exact_equal),
        gromov=ses.lp_value,
        nth_root_volume=ses.upper_bound,
        slack=ses.upper_bound - float(ses.lp_value),
    )


def corpus_identities_hold(row):
    """The three exact identities a healthy row satisfies."""
    if row.error is not None:
        return False
    eq_routes = row.seshadri_lp == row.seshadri_domination
    eq_gromov = row.gromov == row.seshadri_lp
    bound = float(row.seshadri_lp) <= row.nth_root_volume + 2 ** -20
    return eq_routes and row.okounkov_identity and eq_gromov and bound
