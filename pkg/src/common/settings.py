from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="EXTALG_", env_file=".env", extra="ignore"
    )

    # determinant settings
    leibniz_max_size: int = 10

    # parallel minor / alternation evaluation, 1 keeps everything in-thread
    max_workers: int = 1

    # logging settings
    log_level: str = "WARNING"
    log_dir: Path = Path("logs")
    log_file_output: bool = False

    # property-suite defaults
    check_default_trials: int = 10
    check_default_seed: int = 0
    check_max_entry: int = 3


settings = Settings()
