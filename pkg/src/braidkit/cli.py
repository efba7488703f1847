"""Command-line interface.

Thin adapters over the library: presentation builders, abelianization,
subgroup rewriting, Smith forms, braid equality, subgroup expression,
homomorphism checks, rank formulas, and the named verification suite.

Exit codes: 0 success, 1 check failure, 2 usage error, 3 input parse error.
"""

from __future__ import annotations

import json
import sys
from fnmatch import fnmatch

import click

from . import hom, models, series, verify as verify_mod
from .freesub import express, fold, membership
from .garside import braid_equal, normal_form
from .intlin import parse_matrix, serialize_matrix, smith_normal_form
from .presentations import (IndexedPresentation, ParseError, Presentation,
                            affine_A, affine_C, artin_braid,
                            b22_two_generator, fullpres, gamma2_b4, gamma2_b5,
                            gamma2_b6plus, kent_peifer, parse_presentation,
                            punctured_sphere, serialize as serialize_presentation, sphere_braid)
from .reidschreier import rs_finite_cyclic, rs_z_window, tietze_eliminate
from .words import Gen, parse_word, word_to_text


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_presentation(path: str) -> Presentation:
    try:
        return parse_presentation(_read_text(path))
    except ParseError as exc:
        click.echo("parse error: %s" % exc, err=True)
        sys.exit(3)


def _parse_weights(p: Presentation, spec: str) -> dict:
    weights = {}
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise click.UsageError("weight entry %r is not PATTERN=INT" % part)
        pattern, value = part.rsplit("=", 1)
        for g in p.generators:
            if fnmatch(str(g), pattern.strip()) or fnmatch(g.name, pattern.strip()):
                weights[g] = int(value)
    return weights


def _parse_gen(text: str) -> Gen:
    w = parse_word(text)
    if len(w) != 1 or w.runs[0][1] != 1:
        raise click.UsageError("%r is not a single generator" % text)
    return w.runs[0][0]


@click.group()
def main():
    """Braid and surface braid group presentation workbench."""


@main.command("present")
@click.option("--family", required=True,
              type=click.Choice(["artin", "sphere", "punctured", "kent-peifer",
                                 "affine-a", "affine-c", "b22", "g2b4", "g2b5",
                                 "g2b6", "full"]))
@click.option("--n", type=int, default=None, help="strand count / index")
@click.option("--m", type=int, default=None, help="strand count for punctured/affine families")
@click.option("--window", type=int, default=2, help="window for indexed families")
def present_cmd(family, n, m, window):
    """Print a built-in presentation in the presentation file format."""
    try:
        if family == "artin":
            p = artin_braid(n)
        elif family == "sphere":
            p = sphere_braid(n)
        elif family == "punctured":
            p = punctured_sphere(m, n)
        elif family == "kent-peifer":
            p = kent_peifer(m)
        elif family == "affine-a":
            p = affine_A(m)
        elif family == "affine-c":
            p = affine_C(m)
        elif family == "b22":
            p = b22_two_generator()
        elif family == "g2b4":
            p = gamma2_b4()
        elif family == "g2b5":
            p = gamma2_b5()
        elif family == "g2b6":
            p = gamma2_b6plus(n)
        else:
            p = fullpres(n)
    except (TypeError, ValueError) as exc:
        raise click.UsageError(str(exc))
    click.echo(serialize_presentation(p), nl=False)


@main.command("ab")
@click.option("--in", "path", required=True, help="presentation file, - for stdin")
def ab_cmd(path):
    """Abelian invariants of a presented group."""
    p = _load_presentation(path)
    click.echo(str(series.abelianization(p)))


@main.command("rs")
@click.option("--in", "path", required=True)
@click.option("--mod", "modulus", type=int, required=True,
              help="cyclic order; 0 for the windowed Z case")
@click.option("--weights", "weights_spec", default="*=1", show_default=True)
@click.option("--transversal", "transversal", required=True,
              help="weight-1 generator, e.g. s[1]")
@click.option("--window", type=int, default=2, show_default=True)
@click.option("--tietze", is_flag=True, help="run the limited eliminator")
def rs_cmd(path, modulus, weights_spec, transversal, window, tietze):
    """Reidemeister-Schreier presentation of a weight-map kernel."""
    p = _load_presentation(path)
    t = _parse_gen(transversal)
    weights = _parse_weights(p, weights_spec)
    try:
        if modulus == 0:
            out = rs_z_window(p, t, weights, window)
        else:
            out = rs_finite_cyclic(p, modulus, t, weights)
        if tietze:
            out = tietze_eliminate(out)
    except ValueError as exc:
        click.echo("error: %s" % exc, err=True)
        sys.exit(1)
    pres = out.presentation
    if isinstance(pres, IndexedPresentation):
        pres = pres.instantiate(window)
    click.echo(serialize_presentation(pres), nl=False)
    click.echo("# dict:")
    for g in pres.generators:
        if g in out.dictionary:
            click.echo("#   %s = %s" % (g, word_to_text(out.dictionary[g])))


@main.command("g2g3")
@click.option("--in", "path", required=True)
@click.option("--transversal", required=True)
def g2g3_cmd(path, transversal):
    """Second lower central quotient for finite cyclic abelianization."""
    p = _load_presentation(path)
    try:
        click.echo(str(series.gamma2_mod_gamma3(p, _parse_gen(transversal))))
    except ValueError as exc:
        click.echo("error: %s" % exc, err=True)
        sys.exit(1)


@main.command("snf")
@click.option("--in", "path", required=True, help="matrix file, - for stdin")
@click.option("--transforms", is_flag=True, help="also print P and Q")
def snf_cmd(path, transforms):
    """Smith normal form of an integer matrix."""
    try:
        m = parse_matrix(_read_text(path))
    except ValueError as exc:
        click.echo("parse error: %s" % exc, err=True)
        sys.exit(3)
    res = smith_normal_form(m)
    click.echo(serialize_matrix(res.d))
    if transforms:
        click.echo("# P")
        click.echo(serialize_matrix(res.p))
        click.echo("# Q")
        click.echo(serialize_matrix(res.q))


@main.command("braid-eq")
@click.option("--n", type=int, required=True, help="strand count")
@click.argument("word1")
@click.argument("word2")
def braid_eq_cmd(n, word1, word2):
    """Decide equality of two braid words via greedy normal forms."""
    try:
        w1, w2 = parse_word(word1), parse_word(word2)
    except ValueError as exc:
        click.echo("parse error: %s" % exc, err=True)
        sys.exit(3)
    nf1, nf2 = normal_form(w1, n), normal_form(w2, n)
    if nf1 == nf2:
        click.echo("equal: %s" % nf1)
    else:
        click.echo("different: %s vs %s" % (nf1, nf2))
        sys.exit(1)


@main.group("subgroup")
def subgroup_cmd():
    """Finitely generated subgroups of free groups."""


def _load_basis(path: str):
    words = []
    for line in _read_text(path).splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.append(parse_word(line))
    return words


@subgroup_cmd.command("express")
@click.option("--basis", "basis_path", required=True,
              help="file with one basis word per line")
@click.option("--word", "word_text", required=True)
def subgroup_express_cmd(basis_path, word_text):
    """Rewrite a member word in the given subgroup basis."""
    try:
        basis = _load_basis(basis_path)
        w = parse_word(word_text)
    except ValueError as exc:
        click.echo("parse error: %s" % exc, err=True)
        sys.exit(3)
    graph = fold(basis)
    try:
        click.echo(word_to_text(express(graph, basis, w)))
    except ValueError as exc:
        click.echo("error: %s" % exc, err=True)
        sys.exit(1)


@subgroup_cmd.command("member")
@click.option("--basis", "basis_path", required=True)
@click.option("--word", "word_text", required=True)
def subgroup_member_cmd(basis_path, word_text):
    """Membership of a word in the subgroup generated by the basis words."""
    try:
        basis = _load_basis(basis_path)
        w = parse_word(word_text)
    except ValueError as exc:
        click.echo("parse error: %s" % exc, err=True)
        sys.exit(3)
    if membership(fold(basis), w):
        click.echo("member")
    else:
        click.echo("not a member")
        sys.exit(1)


_TARGETS = ("z2-z6", "q8-f2", "braid:N", "braid:N-x-z")


def _make_target(spec: str):
    if spec == "z2-z6":
        return models.z2z6_model()
    if spec == "q8-f2":
        return models.q8_semidirect_f2()
    if spec.startswith("braid:"):
        rest = spec[len("braid:"):]
        if rest.endswith("-x-z"):
            n = int(rest[:-len("-x-z")])
            return models.DirectProduct((models.GarsideBraidGroup(n),
                                         models.CyclicZ(0)))
        return models.GarsideBraidGroup(int(rest))
    raise click.UsageError("unknown target %r; known: %s" % (spec, ", ".join(_TARGETS)))


def _parse_image(model, text: str):
    """Parse an element: a braid word, or finite;word / vector;k / braid;k
    pairs for the composite targets."""
    text = text.strip()
    if isinstance(model, models.GarsideBraidGroup):
        return model.from_word(parse_word(text))
    if isinstance(model, models.SemidirectAbelianByCyclic):
        vec, k = text.split(";")
        return (tuple(int(x) for x in vec.strip("() ").split(",")), int(k))
    if isinstance(model, models.SemidirectFiniteByFree):
        finite, free = text.split(";")
        return (finite.strip(), parse_word(free))
    if isinstance(model, models.DirectProduct):
        parts = text.split(";")
        braid, k = parts[0], int(parts[1])
        return (model.factors[0].from_word(parse_word(braid)), k)
    raise click.UsageError("no element syntax for this target")


@main.command("hom-check")
@click.option("--in", "path", required=True)
@click.option("--target", required=True, help="one of: %s" % ", ".join(_TARGETS))
@click.option("--assign", "assign_path", required=True,
              help="file of lines GEN = IMAGE")
@click.option("--json", "as_json", is_flag=True)
def hom_check_cmd(path, target, assign_path, as_json):
    """Evaluate every relator under a generator assignment."""
    p = _load_presentation(path)
    model = _make_target(target)
    assignment = {}
    try:
        for line in _read_text(assign_path).splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            gen_text, image_text = line.split("=", 1)
            assignment[_parse_gen(gen_text.strip())] = _parse_image(model, image_text)
    except ValueError as exc:
        click.echo("parse error: %s" % exc, err=True)
        sys.exit(3)
    try:
        report = hom.check_hom(p, model, assignment)
    except ValueError as exc:
        click.echo("error: %s" % exc, err=True)
        sys.exit(1)
    if as_json:
        for c in report.checks:
            click.echo(json.dumps({"relator": word_to_text(c.relator),
                                   "image": c.image, "trivial": c.trivial}))
    else:
        for c in report.checks:
            click.echo("%s  %s -> %s" % ("ok " if c.trivial else "FAIL",
                                         word_to_text(c.relator), c.image))
    if not report.all_trivial:
        sys.exit(1)


@main.command("lcs-ranks")
@click.option("--family", type=click.Choice(["z2-free", "torus"]), required=True)
@click.option("--max-i", type=int, default=8, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def lcs_ranks_cmd(family, max_i, as_json):
    """Closed-form lower central series ranks."""
    fn = series.lcs_rank_z2_free if family == "z2-free" else series.lcs_rank_torus
    reports = [fn(i) for i in range(2, max_i + 1)]
    if as_json:
        for r in reports:
            click.echo(json.dumps({"i": r.i, "rank": r.rank}))
    else:
        for r in reports:
            click.echo("R_%d = %d" % (r.i, r.rank))


@main.command("verify")
@click.option("--filter", "filter_glob", default="all", show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--seed", type=int, default=0, show_default=True,
              help="accepted for reproducibility; the suite is deterministic")
def verify_cmd(filter_glob, as_json, seed):
    """Run the named verification suite."""
    checks = verify_mod.run_verify(filter_glob)
    if not checks:
        click.echo("warning: no checks match %r" % filter_glob, err=True)
        return
    failed = 0
    for c in checks:
        if as_json:
            click.echo(json.dumps({"id": c.id, "status": c.status,
                                   "expected": c.expected, "got": c.got,
                                   "paper_ref": ""}))
        else:
            click.echo("%-34s %s" % (c.id, c.status))
            if c.status == "FAIL":
                click.echo("    expected: %s" % c.expected)
                click.echo("    got:      %s" % c.got)
        if c.status == "FAIL":
            failed += 1
    if not as_json:
        click.echo("%d/%d passed" % (len(checks) - failed, len(checks)))
    if failed:
        sys.exit(1)


if __name__ == "__main__":
    main()
