"""Directory-backed workspace: projects, machine versions, and checks.

Layout under the data root:

    <project>/project.json
    <project>/<version>/version.json
    <project>/<version>/machine.aag | machine.json
    <project>/<version>/<check>/check.json
    <project>/<version>/<check>/formula.hltl
    <project>/<version>/<check>/bundle.json        (only while status is fail)

Ids (p1, v7, c12) are globally unique and recovered by scanning, so a data
directory is self-describing and survives restarts unchanged.  All writes
go through tmp-file-plus-rename; run_check serializes per check id while
distinct checks run freely in parallel.
"""

from __future__ import annotations

import json
import re
import shutil
import threading
import time
from pathlib import Path

from .bundle import analyze_violation, bundle_json, validate_bundle
from .checker import DEFAULT_BOUND, Counterexample, find_counterexample
from .errors import HyperscopeError, UnknownEntity
from .formula import parse_formula
from .machine import load_machine

_ID_RE = re.compile(r"^([pvc])(\d+)$")


def _atomic_write(path: Path, text: str) -> None:
    tmp = path.parent / (path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    tmp.replace(path)


def _write_json(path: Path, payload: dict) -> None:
    _atomic_write(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _read_json(path: Path) -> dict:
    return json.loads(path.read_text(encoding="utf-8"))


def _id_number(name: str) -> int:
    m = _ID_RE.match(name)
    return int(m.group(2)) if m else -1


class WorkbenchStore:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._mutate = threading.Lock()
        self._run_locks: dict[str, threading.Lock] = {}

    # ------------------------------------------------------------- scanning

    def _project_dirs(self) -> list[Path]:
        dirs = [
            d
            for d in self.root.iterdir()
            if d.is_dir() and _ID_RE.match(d.name) and (d / "project.json").exists()
        ]
        return sorted(dirs, key=lambda d: _id_number(d.name))

    def _version_dirs(self, pdir: Path) -> list[Path]:
        dirs = [
            d
            for d in pdir.iterdir()
            if d.is_dir() and _ID_RE.match(d.name) and (d / "version.json").exists()
        ]

        def order(d: Path):
            meta = _read_json(d / "version.json")
            return (meta.get("timestamp", 0), _id_number(d.name))

        return sorted(dirs, key=order)

    def _check_dirs(self, vdir: Path) -> list[Path]:
        dirs = [
            d
            for d in vdir.iterdir()
            if d.is_dir() and _ID_RE.match(d.name) and (d / "check.json").exists()
        ]
        return sorted(dirs, key=lambda d: _id_number(d.name))

    def _next_id(self, prefix: str) -> str:
        highest = 0
        if prefix == "p":
            names = [d.name for d in self._project_dirs()]
        elif prefix == "v":
            names = [v.name for p in self._project_dirs() for v in self._version_dirs(p)]
        else:
            names = [
                c.name
                for p in self._project_dirs()
                for v in self._version_dirs(p)
                for c in self._check_dirs(v)
            ]
        for name in names:
            highest = max(highest, _id_number(name))
        return f"{prefix}{highest + 1}"

    def _find_version(self, vid: str) -> tuple[Path, Path]:
        for pdir in self._project_dirs():
            vdir = pdir / vid
            if vdir.is_dir() and (vdir / "version.json").exists():
                return pdir, vdir
        raise UnknownEntity("version", vid)

    def _find_check(self, cid: str) -> tuple[Path, Path, Path]:
        for pdir in self._project_dirs():
            for vdir in self._version_dirs(pdir):
                cdir = vdir / cid
                if cdir.is_dir() and (cdir / "check.json").exists():
                    return pdir, vdir, cdir
        raise UnknownEntity("check", cid)

    def _machine_path(self, vdir: Path) -> Path:
        for name in ("machine.aag", "machine.json"):
            path = vdir / name
            if path.exists():
                return path
        raise UnknownEntity("machine of version", vdir.name)

    # ---------------------------------------------------------------- views

    def _check_view(self, cdir: Path) -> dict:
        meta = _read_json(cdir / "check.json")
        meta["formulaText"] = (cdir / "formula.hltl").read_text(encoding="utf-8").strip()
        return meta

    def _version_view(self, vdir: Path, with_checks: bool = True) -> dict:
        meta = _read_json(vdir / "version.json")
        if with_checks:
            meta["checks"] = [self._check_view(c) for c in self._check_dirs(vdir)]
        return meta

    # ------------------------------------------------------------- creation

    def create_project(self, name: str, machine_source: str) -> dict:
        load_machine(machine_source)  # validate before touching the tree
        with self._mutate:
            pid = self._next_id("p")
            vid = self._next_id("v")
            pdir = self.root / pid
            vdir = pdir / vid
            vdir.mkdir(parents=True)
            _write_json(pdir / "project.json", {"id": pid, "name": name})
            self._write_machine(vdir, machine_source)
            _write_json(
                vdir / "version.json",
                {"id": vid, "timestamp": time.time(), "tag": None},
            )
        return {"id": pid, "name": name, "versions": [vid]}

    def _write_machine(self, vdir: Path, source: str) -> None:
        name = "machine.aag" if source.lstrip().startswith("aag ") else "machine.json"
        text = source if source.endswith("\n") else source + "\n"
        _atomic_write(vdir / name, text)

    def projects(self) -> list[dict]:
        out = []
        for pdir in self._project_dirs():
            meta = _read_json(pdir / "project.json")
            meta["versions"] = [v.name for v in self._version_dirs(pdir)]
            out.append(meta)
        return out

    def project_versions(self, pid: str) -> list[dict]:
        pdir = self.root / pid
        if not (pdir / "project.json").exists():
            raise UnknownEntity("project", pid)
        return [self._version_view(v) for v in self._version_dirs(pdir)]

    def create_check(self, pid: str, vid: str, formula_text: str, name: str | None = None) -> dict:
        parse_formula(formula_text)  # validate before touching the tree
        pdir = self.root / pid
        if not (pdir / "project.json").exists():
            raise UnknownEntity("project", pid)
        vdir = pdir / vid
        if not (vdir / "version.json").exists():
            raise UnknownEntity("version", vid)
        with self._mutate:
            cid = self._next_id("c")
            cdir = vdir / cid
            cdir.mkdir()
            _atomic_write(cdir / "formula.hltl", formula_text.strip() + "\n")
            _write_json(
                cdir / "check.json",
                {"id": cid, "name": name, "status": "unchecked", "bundleRef": None, "error": None},
            )
        return self._check_view(cdir)

    # ------------------------------------------------------------ operation

    def check_info(self, cid: str) -> dict:
        _, vdir, cdir = self._find_check(cid)
        view = self._check_view(cdir)
        view["versionId"] = vdir.name
        return view

    def bundle_bytes(self, cid: str) -> bytes | None:
        _, _, cdir = self._find_check(cid)
        path = cdir / "bundle.json"
        if not path.exists():
            return None
        return path.read_bytes()

    def _run_lock(self, cid: str) -> threading.Lock:
        with self._mutate:
            return self._run_locks.setdefault(cid, threading.Lock())

    def run_check(self, cid: str, bound: int = DEFAULT_BOUND) -> dict:
        """Model-check one stored check and persist the outcome.

        Pipeline failures are recorded on the check (status untouched) and
        re-raised for the caller to report.
        """
        _, vdir, cdir = self._find_check(cid)
        with self._run_lock(cid):
            meta = _read_json(cdir / "check.json")
            try:
                formula = parse_formula((cdir / "formula.hltl").read_text(encoding="utf-8"))
                machine = load_machine(self._machine_path(vdir).read_text(encoding="utf-8"))
                result = find_counterexample(machine, formula, bound)
                if isinstance(result, Counterexample):
                    bundle = analyze_violation(formula, result.assignment, machine=machine)
                    validate_bundle(bundle)
                    _atomic_write(cdir / "bundle.json", bundle_json(bundle))
                    meta.update(status="fail", bundleRef="bundle.json", error=None)
                else:
                    stale = cdir / "bundle.json"
                    if stale.exists():
                        stale.unlink()
                    meta.update(status="pass-bounded", bundleRef=None, error=None)
                _write_json(cdir / "check.json", meta)
            except HyperscopeError as exc:
                meta["error"] = {"error": type(exc).__name__, "detail": str(exc)}
                _write_json(cdir / "check.json", meta)
                raise
        return self.check_info(cid)

    def edit_formula(self, cid: str, new_text: str) -> dict:
        """Clone the check's version with the formula replaced.

        The new text must parse or nothing is written.  Sibling checks keep
        their results; the edited check restarts as unchecked.  Returns the
        new version view plus the new id of the edited check.
        """
        parse_formula(new_text)
        pdir, vdir, cdir = self._find_check(cid)
        with self._mutate:
            new_vid = self._next_id("v")
            new_vdir = pdir / new_vid
            new_vdir.mkdir()
            machine_path = self._machine_path(vdir)
            shutil.copyfile(machine_path, new_vdir / machine_path.name)
            _write_json(
                new_vdir / "version.json",
                {"id": new_vid, "timestamp": time.time(), "tag": None},
            )
            edited_new_id = None
            next_check_num = _id_number(self._next_id("c"))
            for old_cdir in self._check_dirs(vdir):
                new_cid = f"c{next_check_num}"
                next_check_num += 1
                new_cdir = new_vdir / new_cid
                new_cdir.mkdir()
                old_meta = _read_json(old_cdir / "check.json")
                meta = dict(old_meta, id=new_cid)
                if old_cdir == cdir:
                    edited_new_id = new_cid
                    _atomic_write(new_cdir / "formula.hltl", new_text.strip() + "\n")
                    meta.update(status="unchecked", bundleRef=None, error=None)
                else:
                    shutil.copyfile(old_cdir / "formula.hltl", new_cdir / "formula.hltl")
                    if old_meta.get("bundleRef"):
                        shutil.copyfile(old_cdir / "bundle.json", new_cdir / "bundle.json")
                _write_json(new_cdir / "check.json", meta)
        view = self._version_view(new_vdir)
        view["editedCheckId"] = edited_new_id
        return view

    def tag_version(self, vid: str, tag: str) -> dict:
        _, vdir = self._find_version(vid)
        meta = _read_json(vdir / "version.json")
        meta["tag"] = tag
        _write_json(vdir / "version.json", meta)
        return self._version_view(vdir)
