from typing import Optional

from fastapi import Header, HTTPException

from config import config


def require_api_key(x_api_key: Optional[str] = Header(None, alias="X-API-Key")) -> Optional[str]:
    """
    Check the X-API-Key header against API_KEY.
    When API_KEY is unset the API is open and the header is ignored.
    """
    expected = config.API_KEY
    if not expected:
        return None

    if not x_api_key:
        raise HTTPException(status_code=401, detail="Missing X-API-Key in headers")

    if x_api_key != expected:
        raise HTTPException(status_code=401, detail="Invalid X-API-Key")

    return x_api_key
