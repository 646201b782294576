import logging

import uvicorn
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from simulcores.config import configure_logging, get_settings
from simulcores.routes import router as cores_router

settings = get_settings(default_log_level="INFO")

# Configure logging
configure_logging(settings.log_level, settings.log_file)
logger = logging.getLogger(__name__)

app = FastAPI(title="simulcores API",
              description="Counts, extremes and abacus bijections for simultaneous core partitions",
              version="1.0.0")

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["GET", "POST"],
    allow_headers=["*"],
)

app.include_router(cores_router)


@app.get("/health")
def health_check():
    """
    Health check endpoint to verify the API is up.
    """
    return {
        "status": "healthy",
        "threads": settings.threads,
        "max_oracle_size": settings.max_oracle_size,
    }


if __name__ == "__main__":
    logger.info(f"Starting simulcores API on {settings.api_host}:{settings.api_port}")
    uvicorn.run(
        "main:app",
        host=settings.api_host,
        port=settings.api_port,
    )
