"""HTTP face of the workbench.

Thin JSON wrapper around WorkbenchStore: eight routes for project setup,
check management, running the pipeline, and fetching bundles.  All error
responses share the shape {"error": <class>, "detail": <message>}; unknown
ids map to 404, rejected inputs (syntax errors, unsupported formulas,
budget blowups) to 422.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel
from starlette.exceptions import HTTPException as StarletteHTTPException

from .checker import DEFAULT_BOUND
from .errors import HyperscopeError, UnknownEntity
from .store import WorkbenchStore

DATA_DIR_ENV = "HYPERSCOPE_DATA"


class ProjectBody(BaseModel):
    name: str
    machine: str


class CheckBody(BaseModel):
    formulaText: str
    name: str | None = None


class FormulaBody(BaseModel):
    formulaText: str


class TagBody(BaseModel):
    tag: str


def create_app(data_dir: str | None = None) -> FastAPI:
    root = data_dir or os.environ.get(DATA_DIR_ENV, "data")
    store = WorkbenchStore(root)
    app = FastAPI(title="hyperscope workbench")
    app.state.store = store
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(HyperscopeError)
    async def on_domain_error(request: Request, exc: HyperscopeError):
        status = 404 if isinstance(exc, UnknownEntity) else 422
        return JSONResponse(
            {"error": type(exc).__name__, "detail": str(exc)}, status_code=status
        )

    @app.exception_handler(StarletteHTTPException)
    async def on_http_error(request: Request, exc: StarletteHTTPException):
        return JSONResponse(
            {"error": "HTTPError", "detail": str(exc.detail)}, status_code=exc.status_code
        )

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc: RequestValidationError):
        return JSONResponse(
            {"error": "ValidationError", "detail": str(exc)}, status_code=422
        )

    @app.get("/projects")
    def list_projects():
        return {"projects": store.projects()}

    @app.post("/projects", status_code=201)
    def create_project(body: ProjectBody):
        return {"project": store.create_project(body.name, body.machine)}

    @app.get("/projects/{pid}/versions")
    def list_versions(pid: str):
        return {"versions": store.project_versions(pid)}

    @app.post("/projects/{pid}/versions/{vid}/checks", status_code=201)
    def create_check(pid: str, vid: str, body: CheckBody):
        return {"check": store.create_check(pid, vid, body.formulaText, body.name)}

    @app.post("/checks/{cid}/run")
    def run_check(cid: str, bound: int = DEFAULT_BOUND):
        return {"check": store.run_check(cid, bound)}

    @app.get("/checks/{cid}/bundle")
    def get_bundle(cid: str):
        raw = store.bundle_bytes(cid)
        if raw is None:
            return JSONResponse(
                {"error": "NoBundle", "detail": f"check {cid} has no counterexample bundle"},
                status_code=404,
            )
        return Response(content=raw, media_type="application/json")

    @app.put("/checks/{cid}/formula")
    def edit_formula(cid: str, body: FormulaBody):
        return {"version": store.edit_formula(cid, body.formulaText)}

    @app.post("/versions/{vid}/tag")
    def tag_version(vid: str, body: TagBody):
        return {"version": store.tag_version(vid, body.tag)}

    return app
