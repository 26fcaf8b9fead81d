"""Settings for config project (Base)."""

import math
import os
from pathlib import Path

import environ

BASE_DIR = Path(__file__).resolve().parent.parent.parent

env = environ.Env(
    DEBUG=(bool, False),
    SIMULATION_WORKERS=(int, 1),
    SIMULATION_LOG_LEVEL=(str, "INFO"),
)
environ.Env.read_env(os.path.join(BASE_DIR, "config", ".env"))

PROJECT_APPS = [
    "apps.utils",
    "apps.linalg",
    "apps.bhz",
    "apps.invariants",
    "apps.dynamics",
    "apps.tomography",
    "apps.runs",
]

THIRD_APPS = [
    "rest_framework",
]

INSTALLED_APPS = PROJECT_APPS + THIRD_APPS

LANGUAGE_CODE = "en"

TIME_ZONE = "UTC"

USE_I18N = True

USE_TZ = True

REST_FRAMEWORK = {
    "UNAUTHENTICATED_USER": None,
    "COERCE_DECIMAL_TO_STRING": False,
}

# Reduced units: A sets the energy scale and hbar = 1.
SIMULATION_DEFAULTS = {
    "A": 1.0,
    "g": 0.0,
    "gap_floor": 1e-6,
    "grid_size": 60,
    "omega_t_over_pi": 24.0,
    "steps": 4800,
    "meas_count": 60,
    "ky_lines": 11,
    "smoothing_window": 1,
    "scheme": "magnus4",
    "lead_in": math.pi / 2.0,
    "reference_mode": "adiabatic",
    "tomography_ky": 0.5,
    "frames_kx": 0.3,
    "frames_ky": 0.7,
    "synthetic_carrier_scale": 50.0,
    "frames_duration": 4.0,
    "frames_samples": 400,
    "workers": env("SIMULATION_WORKERS"),
}

SIMULATION_OUTPUT_DIR = Path(env("SIMULATION_OUTPUT_DIR", default=str(BASE_DIR)))

# Annotation copied into every JSON summary; never used in the numerics.
PHYSICAL_UNITS = {
    "A_rad_per_s": 2 * math.pi * 24e3,
    "B_rad_per_s": 2 * math.pi * 24e3,
    "T_s": 500e-6,
    "note": "Outputs are in reduced units with A = 1 and hbar = 1.",
}

LOG_DIR = os.path.join(BASE_DIR, "logs")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {
        "file": {
            "class": "logging.handlers.RotatingFileHandler",
            "filename": os.path.join(LOG_DIR, "simulation.log"),
            "maxBytes": 5 * 1024 * 1024,
            "backupCount": 3,
            "level": "DEBUG",
            "formatter": "verbose",
        },
        "console": {
            "class": "logging.StreamHandler",
            "level": env("SIMULATION_LOG_LEVEL"),
            "formatter": "simple",
        },
    },
    "loggers": {
        "apps": {
            "level": "DEBUG",
            "handlers": ["file", "console"],
            "propagate": False,
        },
    },
    "formatters": {
        "simple": {
            "format": "{asctime}:{levelname} {message}",
            "style": "{",
        },
        "verbose": {
            "format": (
                "{asctime}:{levelname} - {name} {module}.py "
                "(line {lineno:d}. {message})"
            ),
            "style": "{",
        },
    },
}
