"""
FastAPI backend for the weighted zero-sum laboratory
Every route returns the same report the CLI prints with --format json
"""
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from wzslab.errors import ParseError, WzsError
from wzslab.logger import logger

app = FastAPI(
    title="wzslab API",
    description="Monoids of weighted zero-sum sequences and binary quadratic forms",
    version="1.0.0"
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

from .routes import monoid, structure, qform, system

app.include_router(monoid.router, prefix="/api/monoid", tags=["monoid"])
app.include_router(structure.router, prefix="/api/structure", tags=["structure"])
app.include_router(qform.router, prefix="/api/qform", tags=["qform"])
app.include_router(system.router, prefix="/api/system", tags=["system"])

@app.exception_handler(WzsError)
async def wzs_error_handler(request: Request, exc: WzsError):
    status = 422 if isinstance(exc, ParseError) else 400
    logger.debug(f"{request.url.path}: {type(exc).__name__}: {exc}")
    return JSONResponse(status_code=status,
                        content={"error": type(exc).__name__, "detail": str(exc), "exitCode": exc.exit_code})

@app.get("/api/health")
async def health_check():
    """Health check endpoint"""
    return {"status": "ok", "message": "wzslab API is running"}

if __name__ == "__main__":
    import uvicorn
    from wzslab.config import API_HOST, API_PORT
    uvicorn.run(app, host=API_HOST, port=API_PORT)
