"""
WSGI config for skew_dyck project.

It exposes the WSGI callable as a module-level variable named ``application``.
gunicorn serves it for the read-only JSON API (see render.yaml).
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'skew_dyck.settings')

application = get_wsgi_application()
