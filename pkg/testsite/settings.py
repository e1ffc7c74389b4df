"""
Django settings for the testsite project used to run the starfas commands
and test-suite.

For more information on this file, see
https://docs.djangoproject.com/en/3.2/topics/settings/
"""

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
import os
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
APP_NAME = os.path.basename(BASE_DIR)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = True

SECRET_KEY = 'testsite-only-not-a-secret'

# Application definition

INSTALLED_APPS = (
    'starfas',
    'testsite',
)

# No models, no database.
DATABASES = {}

# Internationalization
# https://docs.djangoproject.com/en/3.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

# starfas
# -------
STARFAS = {
    'OUTPUT_DIR': os.getenv('STARFAS_OUTPUT_DIR',
        os.path.join(BASE_DIR, 'results')),
    'SEED': int(os.getenv('STARFAS_SEED', '0')),
}

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '%(levelname)s %(name)s: %(message)s'
        },
    },
    'handlers': {
        'logfile':{
            'level':'DEBUG',
            'formatter': 'simple',
            'class':'logging.StreamHandler',
        },
    },
    'loggers': {
        'starfas': {
            'handlers': ['logfile'],
            'level': 'INFO',
            'propagate': False,
        },
        'py.warnings': {
            'handlers': ['logfile'],
            'level': 'WARNING',
            'propagate': False,
        },
    },
}
