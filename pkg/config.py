"""
========================================
holkit Configuration Module
========================================

Configuration settings for the holkit command line.
Uses environment variables (and a .env file) with fallback defaults.
========================================
"""

import logging
import os

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger('holkit.config')

# Smallest accepted value of each integer setting
INTEGER_SETTINGS = {
    'HOLKIT_COUNT': 1,
    'HOLKIT_MAX_X_LENGTH': 0,
    'HOLKIT_WORKERS': 1,
}


def _seed_text():
    return os.environ.get('HOLKIT_SEED', '7').strip()


def _is_integer(text):
    return text.lstrip('+-').isdigit()


def _setting_text(name):
    return (os.environ.get(name) or '').strip()


def _int_setting(name, default):
    text = _setting_text(name)
    if not _is_integer(text) or int(text) < INTEGER_SETTINGS.get(name, 0):
        return default
    return int(text)


def invalid_settings():
    """Integer settings in the environment that do not parse or fall below their minimum."""
    bad = {}
    for name, minimum in INTEGER_SETTINGS.items():
        text = _setting_text(name)
        if text and (not _is_integer(text) or int(text) < minimum):
            bad[name] = text
    return bad


class Config:
    # ==================== Random Suites ====================
    SEED_SETTING = _seed_text()
    DEFAULT_SEED = int(SEED_SETTING) if _is_integer(SEED_SETTING) else 7
    DEFAULT_COUNT = _int_setting('HOLKIT_COUNT', 1000)

    # Length caps for generated words. Images under x-words grow
    # exponentially in the x-length, so it gets its own smaller cap.
    MAX_WORD_LENGTH = 32
    MAX_X_LENGTH = _int_setting('HOLKIT_MAX_X_LENGTH', 6)
    SANOV_MAX_LENGTH = 64

    # ==================== Execution ====================
    WORKERS = _int_setting('HOLKIT_WORKERS', 1)
    CHUNK_SIZE = 250

    # ==================== Output & Logging ====================
    OUTPUT_FORMAT = 'text'
    LOG_LEVEL = os.environ.get('HOLKIT_LOG_LEVEL', 'WARNING').upper()

    @classmethod
    def init_app(cls, app):
        bad = invalid_settings()
        if bad:
            listing = ', '.join(f"{name}='{text}'" for name, text in bad.items())
            raise ValueError(f'expected integer settings within range: {listing}')


class ProductionConfig(Config):
    @classmethod
    def init_app(cls, app):
        super().init_app(app)
        if not _is_integer(_seed_text()):
            raise ValueError(f"HOLKIT_SEED must be an integer, got '{_seed_text()}'")
        logger.info('Running in production mode with %d worker(s)', cls.WORKERS)


class DevelopmentConfig(Config):
    pass


class TestingConfig(Config):
    DEFAULT_SEED = 7
    DEFAULT_COUNT = 50
    MAX_X_LENGTH = 4
    WORKERS = 1
    CHUNK_SIZE = 25


config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}


def get_config(env=None):
    if env is None:
        env = os.environ.get('HOLKIT_ENV', 'development')
    config_class = config.get(env, config['default'])
    logger.debug('Using configuration: %s', config_class.__name__)
    return config_class
