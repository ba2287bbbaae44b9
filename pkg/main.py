import uvicorn
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from config.config import API_HOST, API_PORT, API_RELOAD
from routes.classify_routes import router as classify_router
from routes.construct_routes import router as construct_router
from utils.logger import get_logger

app = FastAPI(title="Bipartite TSG")
log = get_logger("FastAPI")

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(classify_router)
app.include_router(construct_router)


if __name__ == "__main__":
    log.info(f"Starting API on {API_HOST}:{API_PORT}")
    uvicorn.run("main:app", host=API_HOST, port=API_PORT, reload=API_RELOAD)
