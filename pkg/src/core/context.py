import logging
import random
from contextlib import asynccontextmanager
from dataclasses import dataclass

from src.config import SessionConfig, load_config
from src.paperlab.sampling import stream

logger = logging.getLogger(__name__)


@dataclass
class SuiteContext:
    """
    Shared state of one suite run: the session configuration and the seeds
    the sampled checks draw from.
    """

    config: SessionConfig

    @property
    def seed(self) -> int:
        return self.config.SEED

    @property
    def sample_seed(self) -> int:
        return self.config.SAMPLE_SEED

    @property
    def version(self) -> str:
        return self.config.VERSION

    def rng(self, check_id: str) -> random.Random:
        """Independent stream per check, fixed by (sample seed, check id)."""
        return stream(self.sample_seed, check_id)


@asynccontextmanager
async def suite_context(config: SessionConfig | None = None):
    """
    Build the context the replication suite runs in and log its lifetime.
    """
    config = config or load_config()
    logger.info(
        "Initializing suite context (seed=%d, sample seed=%d)...",
        config.SEED,
        config.SAMPLE_SEED,
    )
    ctx = SuiteContext(config=config)
    try:
        yield ctx
    finally:
        logger.info("Closing suite context...")
