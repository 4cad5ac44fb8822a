from django.urls import path, include
from rest_framework.routers import DefaultRouter

from cli.api_views import (
    AsymptoticsViewSet, BivariateViewSet, CountViewSet, LevelViewSet,
    PathViewSet, SeriesViewSet,
)

# Create router
router = DefaultRouter()

# Register viewsets
router.register(r'count', CountViewSet, basename='count')
router.register(r'series', SeriesViewSet, basename='series')
router.register(r'bivariate', BivariateViewSet, basename='bivariate')
router.register(r'levels', LevelViewSet, basename='level')
router.register(r'asympt', AsymptoticsViewSet, basename='asympt')
router.register(r'paths', PathViewSet, basename='path')

urlpatterns = [
    path('', include(router.urls)),
]
