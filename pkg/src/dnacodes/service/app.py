"""FastAPI service exposing construction, verification and bounds."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import bounds as bounds_mod
from .. import codes, formats, nho, quinary, ring
from .schemas import (
    BoundsRequest,
    BoundsResponse,
    CodebookModel,
    DistanceRequest,
    DistanceResponse,
    ExportRequest,
    ExportResponse,
    GauRmRequest,
    GauRmResponse,
    ImportRequest,
    ImportResponse,
    InfoResponse,
    NhoAdmissibility,
    NhoRequest,
    NhoResponse,
    QuinaryRequest,
    QuinaryResponse,
    ReportModel,
    VerifyRequest,
    VerifyResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(title="dnacodes", version="0.1.0")

    @app.exception_handler(ValueError)
    async def value_error_handler(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/construct/gau-rm", response_model=GauRmResponse)
    def construct_gau_rm(req: GauRmRequest) -> GauRmResponse:
        z = ring.RingElement.parse(req.z)
        n, m_size, dist = ring.rm_parameters(req.r, req.m, z)
        book = ring.rm_dna_code(req.r, req.m, z)
        return GauRmResponse(
            r=req.r, m=req.m, z=z.name,
            predicted={"n": 2 * n, "M": m_size, "d_H": dist},
            codebook=CodebookModel.from_codebook(book))

    @app.post("/construct/quinary", response_model=QuinaryResponse)
    def construct_quinary(req: QuinaryRequest) -> QuinaryResponse:
        book = quinary.quinary_dna_code(req.k)
        predicted = {"n": 2 ** (2 * req.k - 1), "M": 5 ** req.k,
                     "d_H": 3 * 4 ** (req.k - 2)}
        return QuinaryResponse(k=req.k, predicted=predicted,
                               codebook=CodebookModel.from_codebook(book))

    @app.post("/construct/nho", response_model=NhoResponse)
    def construct_nho(req: NhoRequest) -> NhoResponse:
        pair = nho.BlockPair(req.x, req.y)
        if req.code is not None:
            binary = nho.builtin_binary_code(req.code)
        elif req.words:
            binary = codes.Codebook.from_words(req.words, "binary")
        else:
            raise ValueError("provide either a builtin code name or words")
        admissibility = NhoAdmissibility(
            rrc_admissible=nho.block_pair_rrc_admissible(pair),
            tandem_admissible=nho.block_pair_tandem_admissible(pair),
            predicted_gc_weight=nho.gc_weight_predict(pair, binary.n))
        book = nho.build_dna_code(binary, pair)
        return NhoResponse(admissibility=admissibility,
                           codebook=CodebookModel.from_codebook(book))

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        book = req.codebook.to_codebook()
        specs = codes.parse_constraints(req.constraints)
        reports = codes.check_constraints(book, specs)
        return VerifyResponse(
            passed=all(r.passed for r in reports),
            reports=[ReportModel(**r.to_dict()) for r in reports])

    @app.post("/distance", response_model=DistanceResponse)
    def distance(req: DistanceRequest) -> DistanceResponse:
        if req.metric == "hamming":
            from .. import dna
            value = dna.hamming(req.a, req.b)
        elif req.metric == "gau":
            xs = [ring.RingElement.parse(t) for t in req.a.split()]
            ys = [ring.RingElement.parse(t) for t in req.b.split()]
            value = ring.gau_distance_vector(xs, ys)
        else:
            if req.l is None:
                raise ValueError("nho distance needs the block length l")
            value = nho.d_nho(req.a, req.b, req.l)
        return DistanceResponse(metric=req.metric, distance=value)

    @app.post("/bounds", response_model=BoundsResponse)
    def bounds_endpoint(req: BoundsRequest) -> BoundsResponse:
        name = req.name
        if name in bounds_mod.RELATIONS:
            holds = bounds_mod.relation_check(name, req.values)
            return BoundsResponse(name=name, holds=holds)
        if name == "johnson_gc_step":
            if req.n is None or req.d is None or req.w is None \
                    or req.a_prev is None:
                raise ValueError("johnson_gc_step needs n, d, w and a_prev")
            result = bounds_mod.johnson_gc_step(req.n, req.d, req.w,
                                                req.a_prev,
                                                req.variant or "w-1")
            return BoundsResponse(**result.to_dict())
        fn = bounds_mod.BOUNDS.get(name)
        if fn is None:
            raise ValueError(f"unknown bound {name!r}")
        if req.n is None or req.d is None:
            raise ValueError(f"bound {name} needs n and d")
        if name in ("gc_plotkin", "gc_gilbert", "gc_rc_gilbert",
                    "homopolymer_gc_gilbert"):
            if req.w is None:
                raise ValueError(f"bound {name} needs w")
            result = fn(req.n, req.d, req.w)
        else:
            result = fn(req.n, req.d)
        return BoundsResponse(**result.to_dict())

    @app.post("/info", response_model=InfoResponse)
    def info(codebook: CodebookModel) -> InfoResponse:
        stats = codes.info(codebook.to_codebook())
        return InfoResponse(alphabet=stats["alphabet"], n=stats["n"],
                            m=stats["M"], d_h=stats["d_H"],
                            min_reverse_distance=stats.get("min_reverse_distance"),
                            min_rc_distance=stats.get("min_rc_distance"),
                            gc_profile=stats.get("gc_profile"))

    @app.post("/export", response_model=ExportResponse)
    def export(req: ExportRequest) -> ExportResponse:
        book = req.codebook.to_codebook()
        return ExportResponse(format=req.format,
                              content=formats.render(book, req.format))

    @app.post("/import", response_model=ImportResponse)
    def import_(req: ImportRequest) -> ImportResponse:
        book = formats.parse(req.content, req.format, req.alphabet)
        return ImportResponse(codebook=CodebookModel.from_codebook(book))

    return app


app = create_app()
