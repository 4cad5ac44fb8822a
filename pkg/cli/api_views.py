from django.http import HttpResponse
from rest_framework import status, viewsets
from rest_framework.decorators import action
from rest_framework.permissions import AllowAny
from rest_framework.response import Response

from asymptotics.estimates import DEFAULT_N_VALUES, constants, convergence_report
from asymptotics.serializers import AsymptQuerySerializer, ConstantsSerializer, ConvergenceRowSerializer
from paths.serializers import WordSerializer, report_data
from paths.steps import SkewPath
from paths.svg import RenderOptions, render_svg
from series.serializers import CountQuerySerializer, LevelsQuerySerializer, SeriesQuerySerializer, parse_t_eval

from .pipelines import bivariate_payload, count_payload, levels_payload, series_payload


def _query(request, serializer_class, **extra):
    data = request.query_params.copy()
    for key, value in extra.items():
        data[key] = value
    return serializer_class(data=data)


class CountViewSet(viewsets.ViewSet):
    """GET /api/count/?length=&level=&t_eval="""
    permission_classes = [AllowAny]

    def list(self, request):
        serializer = _query(request, CountQuerySerializer)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        attrs = serializer.validated_data
        payload = count_payload(attrs['length'], attrs['level'], attrs.get('t_eval') or parse_t_eval('track'))
        return Response(payload.data())


class SeriesViewSet(viewsets.ViewSet):
    """GET /api/series/?order=&half_length=&t_eval="""
    permission_classes = [AllowAny]

    def list(self, request):
        serializer = _query(request, SeriesQuerySerializer)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        attrs = serializer.validated_data
        payload = series_payload(attrs['order'], attrs['half_length'],
                                 attrs.get('t_eval') or parse_t_eval('zero'))
        return Response(payload.data())


class BivariateViewSet(viewsets.ViewSet):
    """GET /api/bivariate/?order="""
    permission_classes = [AllowAny]

    def list(self, request):
        serializer = _query(request, SeriesQuerySerializer)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        attrs = serializer.validated_data
        payload = bivariate_payload(attrs['order'], attrs.get('t_eval') or parse_t_eval('track'))
        return Response(payload.data())


class LevelViewSet(viewsets.ViewSet):
    """GET /api/levels/<k>/?order=&half_length=&t_eval="""
    permission_classes = [AllowAny]

    def retrieve(self, request, pk=None):
        serializer = _query(request, LevelsQuerySerializer, k=pk)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        attrs = serializer.validated_data
        payload = levels_payload(attrs['k'], attrs['order'], attrs['half_length'],
                                 attrs.get('t_eval') or parse_t_eval('zero'))
        return Response(payload.data())


class AsymptoticsViewSet(viewsets.ViewSet):
    """GET /api/asympt/?n=50&n=100"""
    permission_classes = [AllowAny]

    def list(self, request):
        serializer = AsymptQuerySerializer(data=request.query_params)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        n_values = serializer.validated_data.get('n') or list(DEFAULT_N_VALUES)
        return Response({
            'constants': ConstantsSerializer(constants()).data,
            'rows': ConvergenceRowSerializer(convergence_report(n_values), many=True).data,
        })


class PathViewSet(viewsets.ViewSet):
    """Validate and draw single step words"""
    permission_classes = [AllowAny]

    @action(detail=False, methods=['get'])
    def validate(self, request):
        """GET /api/paths/validate/?word=UUDR"""
        serializer = WordSerializer(data=request.query_params)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        return Response(report_data(serializer.validated_data['word']))

    @action(detail=False, methods=['get'])
    def render(self, request):
        """GET /api/paths/render/?word=UUDRDD&unit_px=20 as image/svg+xml"""
        serializer = WordSerializer(data=request.query_params)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        attrs = serializer.validated_data
        try:
            path = SkewPath.from_steps(attrs['word'])
        except ValueError as e:
            return Response({'word': [str(e)]}, status=status.HTTP_400_BAD_REQUEST)
        svg = render_svg(path, RenderOptions.from_settings(unit_px=attrs.get('unit_px')))
        return HttpResponse(svg, content_type='image/svg+xml')
