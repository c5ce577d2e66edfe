from pydantic_settings import BaseSettings
from functools import lru_cache

class NumericsSettings(BaseSettings):
    DEPENDENCE_TOL: float = 1e-12
    ILL_CONDITIONED_RATIO: float = 1e-13
    PSD_TOL: float = 1e-10
    JACOBI_TOL: float = 1e-14
    JACOBI_MAX_SWEEPS: int = 64

    class Config:
        env_prefix = "BIORTHO_"
        case_sensitive = True

class Settings(BaseSettings):
    # Logging before a run configuration exists
    LOG_LEVEL: str = "INFO"

    # Nested settings
    numerics: NumericsSettings = NumericsSettings()

    class Config:
        env_prefix = "BIORTHO_"
        case_sensitive = True

@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()
