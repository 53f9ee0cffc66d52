import functools
import logging
from typing import Callable

from errors import AlgebraSpecError, AlgebraTooLarge, MismatchReport


def reports_engine_errors(func: Callable) -> Callable:
    """Decorator that turns engine failures into a reply string instead of raising to the client"""

    @functools.wraps(func)
    async def wrapper(ctx, *args, **kwargs):
        logging.info(f"Running tool {func.__name__}")
        try:
            return await func(ctx, *args, **kwargs)
        except AlgebraSpecError as e:
            logging.info(f"Rejected algebra literal: {str(e)}")
            return f"Error parsing algebra: {str(e)}"
        except AlgebraTooLarge as e:
            logging.info(f"Refused oversized algebra: {str(e)}")
            return f"Error: {str(e)}"
        except MismatchReport as e:
            logging.error(f"Verification mismatch: {str(e)}")
            return f"Verification failed: {str(e)}"
        except ValueError as e:
            logging.info(f"{type(e).__name__} in {func.__name__}: {str(e)}")
            return f"Error ({type(e).__name__}): {str(e)}"

    return wrapper
