"""Run manifests: everything needed to reproduce a run bit-identically."""

import json
from pathlib import Path


def manifest_path_for(csv_path) -> Path:
    p = Path(csv_path)
    return p.with_name(p.name + ".manifest.json")


def build_manifest(kind: str, scenario_params: dict, output_params: dict,
                   version: str, duration_s: float, stats=None,
                   outputs: dict | None = None, extra: dict | None = None,
                   command: dict | None = None) -> dict:
    manifest = {
        "kind": kind,
        "parameters": {
            "scenario": scenario_params,
            "output": output_params,
        },
        "version": version,
        "duration_s": duration_s,
        "integrator": {
            "steps": getattr(stats, "steps", 0),
            "rejections": getattr(stats, "rejections", 0),
        },
        "outputs": outputs or {},
    }
    if extra:
        manifest["results"] = extra
    if command:
        manifest["command"] = command
    return manifest


def write_manifest(path, manifest: dict):
    Path(path).write_text(json.dumps(manifest, indent=2, sort_keys=True)
                          + "\n", encoding="utf-8", newline="")


def load_manifest(path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))
