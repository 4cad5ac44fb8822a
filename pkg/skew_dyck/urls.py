"""
URL configuration for skew_dyck project.
Read-only JSON API; the command line lives in manage.py.
"""
from django.urls import path, include

urlpatterns = [
    # API endpoints
    path('api/', include('skew_dyck.api_urls')),
]
