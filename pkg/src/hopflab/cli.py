"""Command-line interface: load Hopf data files, run named computations,
emit deterministic JSON reports (optional plain-text rendering).

Exit codes: 0 verified success, 1 verified mathematical failure (an axiom
or series check that ran and said "no"), 2 operational error.  Reports
embed the input content hash and the tool version; running the same
command twice on the same input produces byte-identical output.

HOPFLAB_CYCLOTOMIC_ORDER overrides the file-level conductor (must be a
multiple) to retry computations that raised a field-too-small error.
"""

from __future__ import annotations

import json
import os
import sys

import click

from . import __version__
from .coideal import coideal_closure, coideal_from_subspace
from .errors import AxiomError, HopfLabError, SchemaError
from .harmonic import coideal_characters, induce_character, reciprocity_table
from .linalg import Subspace
from .scalars import scalar_to_string
from .serialize import (
    coideal_to_dict,
    content_hash,
    dumps_canonical,
    load_hopf,
    save_hopf,
)
from .solvability import (
    ascending_central_series,
    check_nilpotent_criterion,
    check_solvable_series,
    find_solvable_series,
    skryabin_counterexample,
)


def _conductor_override():
    value = os.environ.get("HOPFLAB_CYCLOTOMIC_ORDER")
    return int(value) if value else None


def _load(path, skip_verify=False):
    return load_hopf(path, verify=not skip_verify, conductor_override=_conductor_override())


def _element_str(hopf, vec):
    parts = []
    for i, c in enumerate(vec):
        if not c.is_zero():
            parts.append(f"({scalar_to_string(c)})*{hopf.label(i)}")
    return " + ".join(parts) if parts else "0"


def _emit(command, result, exit_code, input_file=None, input_hash=None,
          workspace=None, text=None, as_text=False):
    report = {
        "tool": "hopflab",
        "version": __version__,
        "command": command,
        "result": result,
    }
    if input_file is not None:
        report["input"] = {"file": os.path.basename(input_file), "sha256": input_hash}
    payload = dumps_canonical(report)
    if workspace:
        os.makedirs(workspace, exist_ok=True)
        name = f"{command}-{content_hash(payload)[:12]}.json"
        out_path = os.path.join(workspace, name)
        with open(out_path, "w") as fh:
            fh.write(payload)
        click.echo(out_path)
    elif as_text and text is not None:
        click.echo(text)
    else:
        click.echo(payload, nl=False)
    sys.exit(exit_code)


def _fail(message):
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _parse_gens(hopf, gens):
    if gens.strip() == "H":
        return [hopf.basis(i) for i in range(hopf.dim)]
    out = []
    for token in gens.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            if token.isdigit():
                out.append(hopf.basis(int(token)))
            else:
                out.append(hopf.basis(hopf.index_of_label(token)))
        except (KeyError, ValueError, IndexError):
            _fail(f"unknown basis element {token!r}")
    return out


def _context_from_gens(hopf, gens):
    return coideal_closure(hopf, _parse_gens(hopf, gens))


workspace_option = click.option(
    "--workspace", type=click.Path(file_okay=False), default=None,
    help="write the report into this directory instead of stdout",
)
text_option = click.option(
    "--text", "as_text", is_flag=True, help="plain-text rendering instead of JSON"
)


@click.group()
@click.version_option(version=__version__, prog_name="hopflab")
def main():
    """Exact computations with semisimple Hopf algebras."""


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@workspace_option
@text_option
def verify(file, workspace, as_text):
    """Check every Hopf axiom of a data file."""
    try:
        hopf, digest = _load(file, skip_verify=True)
    except SchemaError as err:
        _fail(err)
    report = hopf.verify()
    lines = [f"{'ok ' if c.ok else 'FAIL'} {c.name}" + (f" at {c.witness}" if c.witness is not None else "")
             for c in report.checks]
    _emit("verify", report.to_dict(), 0 if report.ok else 1,
          input_file=file, input_hash=digest, workspace=workspace,
          text="\n".join(lines), as_text=as_text)


def _transform_command(name, transform):
    @main.command(name=name)
    @click.argument("file", type=click.Path(exists=True, dir_okay=False))
    @click.option("--out", type=click.Path(dir_okay=False), required=True,
                  help="where to write the resulting Hopf data file")
    @click.option("--skip-verify", is_flag=True)
    @workspace_option
    def cmd(file, out, skip_verify, workspace):
        try:
            hopf, digest = _load(file, skip_verify=skip_verify)
            result_hopf = transform(hopf)
            out_hash = save_hopf(result_hopf, out)
        except (SchemaError, AxiomError, HopfLabError) as err:
            _fail(err)
        _emit(name, {"dim": result_hopf.dim, "output": os.path.basename(out),
                     "output_sha256": out_hash},
              0, input_file=file, input_hash=digest, workspace=workspace)
    return cmd


_transform_command("dual", lambda hopf: hopf.dual())


def _double(hopf):
    from .builders import drinfeld_double
    return drinfeld_double(hopf)


_transform_command("double", _double)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@workspace_option
@text_option
def integrals(file, workspace, as_text):
    """Idempotent integral and dual integral."""
    try:
        hopf, digest = _load(file)
        pair = hopf.integrals()
    except (SchemaError, AxiomError, HopfLabError) as err:
        _fail(err)
    result = {
        "integral": [scalar_to_string(c) for c in pair.integral],
        "dual_integral": [scalar_to_string(c) for c in pair.dual_integral],
    }
    text = (f"integral       = {_element_str(hopf, pair.integral)}\n"
            f"dual integral  = {_element_str(hopf, pair.dual_integral)}")
    _emit("integrals", result, 0, input_file=file, input_hash=digest,
          workspace=workspace, text=text, as_text=as_text)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@workspace_option
@text_option
def characters(file, workspace, as_text):
    """Character table: degrees and character values on the basis."""
    try:
        hopf, digest = _load(file)
        table = hopf.character_table()
    except (SchemaError, AxiomError, HopfLabError) as err:
        _fail(err)
    result = {
        "degrees": table.degrees,
        "characters": [[scalar_to_string(c) for c in chi] for chi in table.characters],
        "basis_labels": [hopf.label(i) for i in range(hopf.dim)],
    }
    header = "chi\\basis | " + " ".join(f"{hopf.label(i):>8}" for i in range(hopf.dim))
    lines = [header, "-" * len(header)]
    for idx, (chi, d) in enumerate(zip(table.characters, table.degrees)):
        row = " ".join(f"{scalar_to_string(c):>8}" for c in chi)
        lines.append(f"chi_{idx} (d={d}) | {row}")
    _emit("characters", result, 0, input_file=file, input_hash=digest,
          workspace=workspace, text="\n".join(lines), as_text=as_text)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--gens", required=True, help='comma-separated basis labels, or "H"')
@click.option("--save", type=click.Path(dir_okay=False), default=None,
              help="also write the context as JSON")
@workspace_option
@text_option
def coideal(file, gens, save, workspace, as_text):
    """Close generators to a left coideal subalgebra and report it."""
    try:
        hopf, digest = _load(file)
        ctx = _context_from_gens(hopf, gens)
    except (SchemaError, AxiomError, HopfLabError) as err:
        _fail(err)
    result = coideal_to_dict(ctx, parent_hash=digest,
                             generators=[g.strip() for g in gens.split(",") if g.strip()])
    if save:
        with open(save, "w") as fh:
            fh.write(dumps_canonical(result))
    text = (f"dim N = {ctx.dim}, dim B = {ctx.invariants.dim}\n"
            f"normal: {ctx.normal}, hopf subalgebra: {ctx.hopf_subalgebra}\n"
            f"integral = {_element_str(hopf, ctx.integral)}")
    _emit("coideal", result, 0, input_file=file, input_hash=digest,
          workspace=workspace, text=text, as_text=as_text)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--gens", required=True)
@workspace_option
@text_option
def reciprocity(file, gens, workspace, as_text):
    """Frobenius reciprocity table for the coideal closure of the generators."""
    try:
        hopf, digest = _load(file)
        ctx = _context_from_gens(hopf, gens)
        table = reciprocity_table(ctx)
    except (SchemaError, AxiomError, HopfLabError) as err:
        _fail(err)
    result = {
        "entries": table.entries,
        "h_degrees": table.h_degrees,
        "n_degrees": table.n_degrees,
    }
    lines = ["chi\\phi | " + " ".join(f"phi_{j}(d={d})" for j, d in enumerate(table.n_degrees))]
    for i, row in enumerate(table.entries):
        cells = " ".join(f"{v:>8}" for v in row)
        lines.append(f"chi_{i} (d={table.h_degrees[i]}) | {cells}")
    _emit("reciprocity", result, 0, input_file=file, input_hash=digest,
          workspace=workspace, text="\n".join(lines), as_text=as_text)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--gens", required=True)
@click.option("--index", "char_index", type=int, default=0,
              help="which irreducible N-character to induce")
@workspace_option
@text_option
def induce(file, gens, char_index, workspace, as_text):
    """Induce an irreducible character of the coideal closure up to H."""
    try:
        hopf, digest = _load(file)
        ctx = _context_from_gens(hopf, gens)
        chars = coideal_characters(ctx)
        if not 0 <= char_index < len(chars):
            _fail(f"character index {char_index} out of range (N has {len(chars)})")
        induced = induce_character(ctx, chars.characters[char_index])
    except (SchemaError, AxiomError, HopfLabError) as err:
        _fail(err)
    degree = hopf.pair(induced, hopf.unit)
    result = {
        "character_index": char_index,
        "induced": [scalar_to_string(c) for c in induced],
        "induced_degree": scalar_to_string(degree),
    }
    _emit("induce", result, 0, input_file=file, input_hash=digest,
          workspace=workspace,
          text=f"phi_{char_index}^up = {_element_str(hopf.dual(), induced)}",
          as_text=as_text)


def _chain_from_file(hopf, path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        _fail(f"cannot read chain file: {err}")
    entries = data["chain"] if isinstance(data, dict) else data
    chain = []
    for entry in entries:
        if entry == "k":
            chain.append(coideal_closure(hopf, []))
        elif entry == "H":
            chain.append(coideal_from_subspace(hopf, Subspace.full(hopf.field, hopf.dim)))
        else:
            chain.append(coideal_closure(hopf, _parse_gens(hopf, ",".join(entry))))
    return chain


@main.command(name="solvable-check")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--chain", "chain_file", required=True, type=click.Path(exists=True, dir_okay=False),
              help='JSON list of chain entries: "k", "H", or lists of generator labels')
@workspace_option
@text_option
def solvable_check(file, chain_file, workspace, as_text):
    """Verify the two solvable-series conditions along a chain."""
    try:
        hopf, digest = _load(file)
        chain = _chain_from_file(hopf, chain_file)
        report = check_solvable_series(hopf, chain)
    except (SchemaError, AxiomError, HopfLabError) as err:
        _fail(err)
    text = f"verdict: {report.verdict}  dims: {[c.dim for c in report.chain]}"
    _emit("solvable-check", report.to_dict(), 0 if report.ok else 1,
          input_file=file, input_hash=digest, workspace=workspace,
          text=text, as_text=as_text)


@main.command(name="solvable-find")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--hints", "hints_file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON list of generator-label lists to seed the search")
@workspace_option
@text_option
def solvable_find(file, hints_file, workspace, as_text):
    """Search for a solvable series (semi-decision; may answer undecided)."""
    try:
        hopf, digest = _load(file)
        hints = []
        if hints_file:
            with open(hints_file) as fh:
                for entry in json.load(fh):
                    hints.append(_parse_gens(hopf, ",".join(entry)))
        report = find_solvable_series(hopf, hints)
    except (SchemaError, AxiomError, HopfLabError) as err:
        _fail(err)
    text = f"verdict: {report.verdict}  dims: {[c.dim for c in report.chain]}"
    _emit("solvable-find", report.to_dict(), 0 if report.ok else 1,
          input_file=file, input_hash=digest, workspace=workspace,
          text=text, as_text=as_text)


@main.command(name="nilpotent-check")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--chain", "chain_file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="optionally also test this chain against the centrality criterion")
@workspace_option
@text_option
def nilpotent_check(file, chain_file, workspace, as_text):
    """Ascending central series and the nilpotency verdict."""
    try:
        hopf, digest = _load(file)
        report = ascending_central_series(hopf)
        result = report.to_dict()
        if chain_file:
            chain = _chain_from_file(hopf, chain_file)
            ok, witness = check_nilpotent_criterion(hopf, chain)
            result["criterion_chain"] = {
                "dims": [c.dim for c in chain],
                "passes": ok,
                "witness": witness,
            }
            if ok != report.is_nilpotent:
                _fail("criterion chain disagrees with the ascending central series")
    except (SchemaError, AxiomError, HopfLabError) as err:
        _fail(err)
    text = f"nilpotent: {report.is_nilpotent}  chain dims: {result['dims']}"
    _emit("nilpotent-check", result, 0 if report.is_nilpotent else 1,
          input_file=file, input_hash=digest, workspace=workspace,
          text=text, as_text=as_text)


@main.command(name="skryabin-demo")
@workspace_option
@text_option
def skryabin_demo(workspace, as_text):
    """Reproduce the non-commuting-integrals counterexample in the dual of
    the smallest nonabelian group algebra."""
    facts = skryabin_counterexample()
    ks3 = facts["group_algebra"]
    ok = (
        facts["dim_n"] == 3 and facts["dim_l"] == 3
        and facts["intersection_dim"] == 1
        and not facts["products_equal"]
        and not facts["integrals_commute"]
        and not facts["product_is_integral"]
        and not facts["projection_injective"]
    )
    result = {
        "dim_n": facts["dim_n"],
        "dim_l": facts["dim_l"],
        "intersection_dim": facts["intersection_dim"],
        "n_is_hopf_subalgebra": facts["n_is_hopf_subalgebra"],
        "product_nl": _element_str(ks3, facts["product_nl_scaled"]),
        "product_ln": _element_str(ks3, facts["product_ln_scaled"]),
        "products_equal": facts["products_equal"],
        "integrals_commute": facts["integrals_commute"],
        "product_is_integral": facts["product_is_integral"],
        "projection_injective_on_l": facts["projection_injective"],
        "all_expected_facts": ok,
    }
    text = (
        f"dim N = {facts['dim_n']}, dim L = {facts['dim_l']}, "
        f"N cap L has dim {facts['intersection_dim']}\n"
        f"lambda_N lambda_L = {result['product_nl']}\n"
        f"lambda_L lambda_N = {result['product_ln']}\n"
        f"products equal: {facts['products_equal']}; integral for the "
        f"generated algebra: {facts['product_is_integral']}\n"
        f"projection along N injective on L: {facts['projection_injective']}"
    )
    _emit("skryabin-demo", result, 0 if ok else 1, workspace=workspace,
          text=text, as_text=as_text)


@main.command()
@click.option("--export", "export_dir", type=click.Path(file_okay=False), default=None,
              help="write all corpus files into a directory")
@workspace_option
def corpus(export_dir, workspace):
    """List (or export) the bundled example algebras."""
    from .corpus import corpus_file, corpus_names, write_corpus_files

    if export_dir:
        hashes = write_corpus_files(export_dir)
        result = {"exported": export_dir, "sha256": hashes}
    else:
        entries = {}
        for name in corpus_names():
            path = corpus_file(name)
            with open(str(path)) as fh:
                text = fh.read()
            entries[name] = {"file": f"{name}.hopf.json", "sha256": content_hash(text),
                             "dim": json.loads(text)["dim"]}
        result = {"algebras": entries}
    _emit("corpus", result, 0, workspace=workspace)


if __name__ == "__main__":
    main()
